#include "hilbertlab/norms/operators.hpp"

#include "hilbertlab/core/grid_function.hpp"
#include "hilbertlab/transforms/periodic.hpp"
#include "hilbertlab/transforms/real_line.hpp"

namespace hilbertlab {

ToeplitzMatrix::ToeplitzMatrix(const Eigen::VectorXd& diagonals, std::string name, Domain domain)
    : op_(diagonals), name_(std::move(name)), domain_(domain) {}

CirculantMatrix::CirculantMatrix(const Eigen::VectorXd& first_column, std::string name)
    : op_(first_column), name_(std::move(name)) {}

SpectralPeriodicHilbert::SpectralPeriodicHilbert(long n) : n_(n) {
  if (!is_power_of_two(n) || n < 2) throw Error(ErrorKind::InvalidArgument, "spectral operator needs a power-of-two size");
}

Eigen::VectorXd SpectralPeriodicHilbert::apply(const Eigen::VectorXd& x) const {
  if (x.size() != n_) throw Error(ErrorKind::DimensionMismatch, "operator/vector size mismatch");
  return periodic_hilbert_fft(x);
}

DenseOperator::DenseOperator(Eigen::MatrixXd a, std::string name) : a_(std::move(a)), name_(std::move(name)) {
  if (a_.rows() != a_.cols() || a_.rows() < 1) throw Error(ErrorKind::InvalidArgument, "dense operator must be square");
}

std::unique_ptr<LinearOperator> make_truncated_operator(OperatorKind::Tag tag, long n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "truncation size must be >= 2");
  switch (tag) {
    case OperatorKind::Tag::PeriodicHilbert:
      return std::make_unique<CirculantMatrix>(periodic_hilbert_cell_kernel(n), "ht");
    case OperatorKind::Tag::RealHilbert:
      return std::make_unique<ToeplitzMatrix>(real_hilbert_cell_kernel(n), "hr", Domain::RealLine);
    case OperatorKind::Tag::DiscreteHilbert:
      return std::make_unique<ToeplitzMatrix>(discrete_hilbert_kernel(n), "hdis", Domain::Integers);
    default:
      break;
  }
  throw Error(ErrorKind::Unsupported, "no truncated matrix for operator '" + to_string(tag) + "'");
}

std::unique_ptr<LinearOperator> make_grid_operator(long n) { return std::make_unique<SpectralPeriodicHilbert>(n); }

}  // namespace hilbertlab

#include "hilbertlab/numerics/fft.hpp"

#include <unsupported/Eigen/FFT>

#include "hilbertlab/core/error.hpp"

namespace hilbertlab::fft {

namespace {

Eigen::FFT<double>& engine() {
  thread_local Eigen::FFT<double> e;
  return e;
}

long next_pow2(long n) {
  long m = 1;
  while (m < n) m <<= 1;
  return m;
}

ComplexVector real_to_complex(const Eigen::VectorXd& x, long len) {
  ComplexVector out(static_cast<std::size_t>(len), Complex(0.0, 0.0));
  for (Eigen::Index i = 0; i < x.size(); ++i) out[static_cast<std::size_t>(i)] = x[i];
  return out;
}

// Transform along one axis of a row-major array.
void transform_axis(ComplexVector& data, const std::vector<long>& extents, std::size_t axis, bool inverse_dir) {
  long stride = 1;
  for (std::size_t a = axis + 1; a < extents.size(); ++a) stride *= extents[a];
  const long n = extents[axis];
  const long total = static_cast<long>(data.size());
  const long block = n * stride;
  ComplexVector line(static_cast<std::size_t>(n)), out;
  for (long outer = 0; outer < total; outer += block) {
    for (long inner = 0; inner < stride; ++inner) {
      for (long k = 0; k < n; ++k) line[static_cast<std::size_t>(k)] = data[static_cast<std::size_t>(outer + inner + k * stride)];
      if (inverse_dir) engine().inv(out, line);
      else engine().fwd(out, line);
      for (long k = 0; k < n; ++k) data[static_cast<std::size_t>(outer + inner + k * stride)] = out[static_cast<std::size_t>(k)];
    }
  }
}

}  // namespace

ComplexVector forward(const ComplexVector& x) {
  ComplexVector out;
  engine().fwd(out, x);
  return out;
}

ComplexVector forward(const Eigen::VectorXd& x) { return forward(real_to_complex(x, x.size())); }

ComplexVector inverse(const ComplexVector& X) {
  ComplexVector out;
  engine().inv(out, X);
  return out;
}

void forward_nd(ComplexVector& data, const std::vector<long>& extents) {
  long total = 1;
  for (long e : extents) total *= e;
  if (total != static_cast<long>(data.size())) throw Error(ErrorKind::DimensionMismatch, "extents do not match data size");
  for (std::size_t a = 0; a < extents.size(); ++a) transform_axis(data, extents, a, false);
}

void inverse_nd(ComplexVector& data, const std::vector<long>& extents) {
  long total = 1;
  for (long e : extents) total *= e;
  if (total != static_cast<long>(data.size())) throw Error(ErrorKind::DimensionMismatch, "extents do not match data size");
  for (std::size_t a = 0; a < extents.size(); ++a) transform_axis(data, extents, a, true);
}

ToeplitzOperator::ToeplitzOperator(const Eigen::VectorXd& c) : n_((c.size() + 1) / 2) {
  if (c.size() % 2 == 0 || c.size() < 1) throw Error(ErrorKind::InvalidArgument, "Toeplitz diagonals need odd length 2n-1");
  m_ = next_pow2(2 * n_ - 1);
  ComplexVector col(static_cast<std::size_t>(m_), Complex(0.0, 0.0)), colt = col;
  for (long k = 0; k < n_; ++k) {
    col[static_cast<std::size_t>(k)] = c[k + n_ - 1];
    colt[static_cast<std::size_t>(k)] = c[n_ - 1 - k];
  }
  for (long k = 1; k < n_; ++k) {
    col[static_cast<std::size_t>(m_ - k)] = c[n_ - 1 - k];
    colt[static_cast<std::size_t>(m_ - k)] = c[n_ - 1 + k];
  }
  spectrum_ = forward(col);
  spectrum_t_ = forward(colt);
}

Eigen::VectorXd ToeplitzOperator::apply_with(const ComplexVector& spectrum, const Eigen::VectorXd& x) const {
  if (x.size() != n_) throw Error(ErrorKind::DimensionMismatch, "Toeplitz operand has the wrong length");
  ComplexVector X = forward(real_to_complex(x, m_));
  for (long k = 0; k < m_; ++k) X[static_cast<std::size_t>(k)] *= spectrum[static_cast<std::size_t>(k)];
  const ComplexVector y = inverse(X);
  Eigen::VectorXd out(n_);
  for (long k = 0; k < n_; ++k) out[k] = y[static_cast<std::size_t>(k)].real();
  return out;
}

Eigen::VectorXd ToeplitzOperator::apply(const Eigen::VectorXd& x) const { return apply_with(spectrum_, x); }
Eigen::VectorXd ToeplitzOperator::apply_transpose(const Eigen::VectorXd& x) const { return apply_with(spectrum_t_, x); }

CirculantOperator::CirculantOperator(const Eigen::VectorXd& c) : n_(c.size()) {
  if (n_ < 1) throw Error(ErrorKind::InvalidArgument, "empty circulant");
  spectrum_ = forward(c);
}

Eigen::VectorXd CirculantOperator::apply(const Eigen::VectorXd& x) const {
  if (x.size() != n_) throw Error(ErrorKind::DimensionMismatch, "circulant operand has the wrong length");
  ComplexVector X = forward(x);
  for (long k = 0; k < n_; ++k) X[static_cast<std::size_t>(k)] *= spectrum_[static_cast<std::size_t>(k)];
  const ComplexVector y = inverse(X);
  Eigen::VectorXd out(n_);
  for (long k = 0; k < n_; ++k) out[k] = y[static_cast<std::size_t>(k)].real();
  return out;
}

Eigen::VectorXd CirculantOperator::apply_transpose(const Eigen::VectorXd& x) const {
  if (x.size() != n_) throw Error(ErrorKind::DimensionMismatch, "circulant operand has the wrong length");
  ComplexVector X = forward(x);
  for (long k = 0; k < n_; ++k) X[static_cast<std::size_t>(k)] *= std::conj(spectrum_[static_cast<std::size_t>(k)]);
  const ComplexVector y = inverse(X);
  Eigen::VectorXd out(n_);
  for (long k = 0; k < n_; ++k) out[k] = y[static_cast<std::size_t>(k)].real();
  return out;
}

}  // namespace hilbertlab::fft

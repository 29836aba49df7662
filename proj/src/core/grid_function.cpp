#include "hilbertlab/core/grid_function.hpp"

#include <cmath>

namespace hilbertlab {

namespace {

void check_samples(const Matrix& samples, const NormedSpace& space) {
  if (samples.rows() < 2) throw Error(ErrorKind::InvalidArgument, "a grid function needs at least 2 samples");
  if (samples.cols() != space.dim())
    throw Error(ErrorKind::DimensionMismatch, "sample columns do not match the space dimension");
}

}  // namespace

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

GridFunction GridFunction::torus(Matrix samples, NormedSpace space) {
  check_samples(samples, space);
  const double h = kTwoPi / static_cast<double>(samples.rows());
  return {Domain::Torus, std::move(samples), h, -kPi, space};
}

GridFunction GridFunction::real_line(Matrix samples, double half_width, NormedSpace space) {
  check_samples(samples, space);
  if (!(half_width > 0.0)) throw Error(ErrorKind::InvalidArgument, "window half-width must be positive");
  const double h = 2.0 * half_width / static_cast<double>(samples.rows());
  return {Domain::RealLine, std::move(samples), h, -half_width + 0.5 * h, space};
}

GridFunction GridFunction::integers(Matrix samples, NormedSpace space) {
  check_samples(samples, space);
  if (samples.rows() % 2 == 0) throw Error(ErrorKind::InvalidArgument, "integer truncation [-N, N] has odd length");
  const double n = static_cast<double>(samples.rows() / 2);
  return {Domain::Integers, std::move(samples), 1.0, -n, space};
}

Vector GridFunction::points() const {
  Vector t(size());
  for (Eigen::Index j = 0; j < size(); ++j) t[j] = point(j);
  return t;
}

GridFunction sample(const PiecewiseFunction& f, Eigen::Index len, double half_width) {
  GridFunction g;
  switch (f.domain()) {
    case Domain::Torus: g = GridFunction::torus(Matrix::Zero(len, f.dim()), f.space()); break;
    case Domain::RealLine: g = GridFunction::real_line(Matrix::Zero(len, f.dim()), half_width, f.space()); break;
    case Domain::Integers: g = GridFunction::integers(Matrix::Zero(len, f.dim()), f.space()); break;
  }
  for (Eigen::Index j = 0; j < len; ++j) g.samples.row(j) = f(g.point(j)).transpose();
  return g;
}

GridFunction cell_average(const PiecewiseFunction& f, Eigen::Index len) {
  if (f.domain() != Domain::Torus) throw Error(ErrorKind::Domain, "cell averages are taken on the Torus");
  if (len < 2) throw Error(ErrorKind::InvalidArgument, "need at least 2 cells");
  GridFunction g = GridFunction::torus(Matrix::Zero(len, f.dim()), f.space());
  const double h = g.spacing;
  for (const Piece& p : f.pieces()) {
    // Shift so that cell j is [j h, (j+1) h) and the piece starts in [0, 2pi).
    double lo = p.lo + kPi + 0.5 * h;
    double hi = p.hi + kPi + 0.5 * h;
    if (lo >= kTwoPi) {
      lo -= kTwoPi;
      hi -= kTwoPi;
    }
    const auto first = static_cast<Eigen::Index>(std::floor(lo / h));
    const auto last = static_cast<Eigen::Index>(std::ceil(hi / h));
    for (Eigen::Index c = first; c < last; ++c) {
      const double overlap = std::min(hi, (c + 1) * h) - std::max(lo, c * h);
      if (overlap > 0.0) g.samples.row(c % len) += (overlap / h) * p.value.transpose();
    }
  }
  return g;
}

double integrate_gauge(const GridFunction& f, const Gauge& g) {
  double acc = 0.0;
  for (Eigen::Index j = 0; j < f.size(); ++j) acc += g.radial(f.space.norm(f.samples.row(j).transpose()));
  return acc * f.spacing;
}

}  // namespace hilbertlab

#include "hilbertlab/transforms/real_line.hpp"

#include <cmath>
#include <functional>

#include "hilbertlab/numerics/quadrature.hpp"
#include "hilbertlab/numerics/special_functions.hpp"

namespace hilbertlab {

Vector real_hilbert_step(const PiecewiseFunction& f, double t) {
  if (f.domain() != Domain::RealLine) throw Error(ErrorKind::Domain, "real-line transform needs a RealLine step function");
  Vector out = f.zero();
  for (const Piece& p : f.pieces()) {
    const double num = std::abs(t - p.lo), den = std::abs(t - p.hi);
    if (num == 0.0 || den == 0.0) throw Error(ErrorKind::SingularPoint, "real-line transform evaluated at a breakpoint");
    out += (std::log(num / den) / kPi) * p.value;
  }
  return out;
}

Vector discrete_hilbert(const PiecewiseFunction& f, long t) {
  if (f.domain() != Domain::Integers) throw Error(ErrorKind::Domain, "discrete transform needs an Integers function");
  Vector out = f.zero();
  const double tt = static_cast<double>(t);
  for (const Piece& p : f.pieces()) {
    if (p.lo == tt) continue;
    out += p.value / (kPi * (tt - p.lo));
  }
  return out;
}

Vector semidiscrete_hilbert(const PiecewiseFunction& f, double eps, double t) {
  if (f.domain() != Domain::RealLine) throw Error(ErrorKind::Domain, "semidiscrete transform needs a RealLine step function");
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "lattice spacing must be positive");
  Vector out = f.zero();
  for (const Piece& p : f.pieces()) {
    // t - eps k in [lo, hi)  <=>  k in ((t - hi)/eps, (t - lo)/eps]
    const long long kmin = static_cast<long long>(std::floor((t - p.hi) / eps)) + 1;
    const long long kmax = static_cast<long long>(std::floor((t - p.lo) / eps));
    double s = 0.0;
    if (kmin <= kmax) {
      s += special::reciprocal_sum(std::max(kmin, 1LL), kmax);
      s += special::reciprocal_sum(kmin, std::min(kmax, -1LL));
    }
    out += (s / kPi) * p.value;
  }
  return out;
}

Vector hilbert_operator_T(const PiecewiseFunction& f, double x) {
  if (f.domain() != Domain::RealLine) throw Error(ErrorKind::Domain, "Hilbert operator needs a RealLine step function");
  if (!(x > 0.0)) throw Error(ErrorKind::Domain, "Hilbert operator is evaluated at x > 0");
  Vector out = f.zero();
  for (const Piece& p : f.pieces()) {
    if (p.lo < 0.0) throw Error(ErrorKind::Domain, "Hilbert operator input must be supported in [0, inf)");
    out += (std::log((x + p.hi) / (x + p.lo)) / kPi) * p.value;
  }
  return out;
}

namespace {

// Integrates g over the box [lo, hi] coordinate by coordinate.
double nested_integral(const std::function<double(const Vector&)>& g, const Vector& lo, const Vector& hi, double tol,
                       Vector& y, int axis) {
  const int d = static_cast<int>(lo.size());
  if (axis == d - 1) {
    auto inner = [&](double s) {
      y[axis] = s;
      return g(y);
    };
    return quad::adaptive(inner, lo[axis], hi[axis], tol, 1e-12).value;
  }
  // Inner integrals are solved an order of magnitude tighter than this level.
  const double inner_tol = 0.1 * tol / std::max(1.0, hi[axis] - lo[axis]);
  auto outer = [&](double s) {
    y[axis] = s;
    return nested_integral(g, lo, hi, inner_tol, y, axis + 1);
  };
  return quad::adaptive(outer, lo[axis], hi[axis], tol, 1e-12).value;
}

}  // namespace

Vector hilbert_operator_T(const BoxFunction& f, const Vector& x, int j, double abs_tol) {
  const int d = f.ambient_dim();
  if (j < 1 || j > d) throw Error(ErrorKind::InvalidArgument, "index j must satisfy 1 <= j <= d");
  if (x.size() != d) throw Error(ErrorKind::DimensionMismatch, "evaluation point has the wrong dimension");
  const int jj = j - 1;
  if (!(x[jj] > 0.0)) throw Error(ErrorKind::Domain, "T_j is evaluated at x_j > 0");
  const double c = std::exp(std::lgamma(0.5 * (d + 1)) - 0.5 * (d + 1) * std::log(kPi));
  Vector out = Vector::Zero(f.space().dim());
  for (const Box& b : f.boxes()) {
    if (b.lo[jj] < 0.0) throw Error(ErrorKind::Domain, "T_j input must be supported in {y_j >= 0}");
    double integral = 0.0;
    if (d == 1) {
      integral = std::log((x[0] + b.hi[0]) / (x[0] + b.lo[0])) / kPi / c;
    } else {
      auto kernel = [&](const Vector& y) {
        const Vector s = x + y;
        return s[jj] / std::pow(s.squaredNorm(), 0.5 * (d + 1));
      };
      Vector y(d);
      integral = nested_integral(kernel, b.lo, b.hi, abs_tol / std::max(1.0, c * b.value.cwiseAbs().maxCoeff()), y, 0);
    }
    out += c * integral * b.value;
  }
  return out;
}

Eigen::VectorXd discrete_hilbert_kernel(long n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "truncation size must be >= 1");
  Eigen::VectorXd c(2 * n - 1);
  for (long k = -(n - 1); k <= n - 1; ++k) c[k + n - 1] = k == 0 ? 0.0 : 1.0 / (kPi * static_cast<double>(k));
  return c;
}

Eigen::VectorXd real_hilbert_cell_kernel(long n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "truncation size must be >= 1");
  // For |k| >= 2 the second difference is (k+1) log1p(1/k) + (k-1) log1p(-1/k),
  // free of the cancellation in the raw form; the kernel is odd.
  auto second_difference = [](long k) {
    if (k == 0) return 0.0;
    const double sign = k < 0 ? -1.0 : 1.0;
    const double a = static_cast<double>(std::abs(k));
    if (a == 1.0) return sign * 2.0 * std::log(2.0);
    return sign * ((a + 1.0) * std::log1p(1.0 / a) + (a - 1.0) * std::log1p(-1.0 / a));
  };
  Eigen::VectorXd c(2 * n - 1);
  for (long k = -(n - 1); k <= n - 1; ++k) c[k + n - 1] = second_difference(k) / kPi;
  return c;
}

}  // namespace hilbertlab

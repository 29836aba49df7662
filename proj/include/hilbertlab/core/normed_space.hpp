#pragma once

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "hilbertlab/core/error.hpp"

namespace hilbertlab {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// R^n with the l_q norm, 1 <= q <= inf. Stand-in for a finite-dimensional
/// Banach space; n = 1 is the scalar case and q != 2 gives non-Hilbert spaces.
class NormedSpace {
 public:
  NormedSpace() = default;
  NormedSpace(int dim, double q) : dim_(dim), q_(q) {
    if (dim < 1) throw Error(ErrorKind::InvalidArgument, "space dimension must be >= 1");
    if (!(q >= 1.0)) throw Error(ErrorKind::InvalidArgument, "norm exponent q must be >= 1");
  }

  static NormedSpace scalar() { return NormedSpace(1, 2.0); }

  int dim() const { return dim_; }
  double q() const { return q_; }
  bool is_hilbert() const { return q_ == 2.0 || dim_ == 1; }

  template <typename Derived>
  void check(const Eigen::MatrixBase<Derived>& x) const {
    if (x.size() != dim_)
      throw Error(ErrorKind::DimensionMismatch, "vector of size " + std::to_string(x.size()) +
                                                    " in space of dimension " + std::to_string(dim_));
  }

  template <typename Derived>
  typename Derived::Scalar norm(const Eigen::MatrixBase<Derived>& x) const {
    check(x);
    return lq_norm(x, q_);
  }

  /// Canonical element of the subdifferential of the norm at x (zero at x = 0).
  /// For q = inf the first coordinate of maximal modulus is chosen.
  template <typename Derived>
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> norm_gradient(
      const Eigen::MatrixBase<Derived>& x) const;

  template <typename Derived>
  static typename Derived::Scalar lq_norm(const Eigen::MatrixBase<Derived>& x, double q);

  bool operator==(const NormedSpace&) const = default;

 private:
  int dim_ = 1;
  double q_ = 2.0;
};

template <typename Derived>
typename Derived::Scalar NormedSpace::lq_norm(const Eigen::MatrixBase<Derived>& x, double q) {
  using Scalar = typename Derived::Scalar;
  if (x.size() == 0) return Scalar(0);
  if (q == 1.0) return x.cwiseAbs().sum();
  if (q == 2.0) return x.norm();
  if (std::isinf(q)) return x.cwiseAbs().maxCoeff();
  // Scale by the largest entry so |x_i|^q neither overflows nor underflows.
  const Scalar scale = x.cwiseAbs().maxCoeff();
  if (scale == Scalar(0)) return Scalar(0);
  Scalar acc(0);
  for (Eigen::Index i = 0; i < x.size(); ++i) acc += std::pow(std::abs(x[i]) / scale, q);
  return scale * std::pow(acc, Scalar(1) / q);
}

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> NormedSpace::norm_gradient(
    const Eigen::MatrixBase<Derived>& x) const {
  using Scalar = typename Derived::Scalar;
  check(x);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> g = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(x.size());
  const Scalar nx = lq_norm(x, q_);
  if (nx == Scalar(0)) return g;
  auto sgn = [](Scalar v) { return Scalar((v > 0) - (v < 0)); };
  if (q_ == 1.0) {
    for (Eigen::Index i = 0; i < x.size(); ++i) g[i] = sgn(x[i]);
  } else if (std::isinf(q_)) {
    Eigen::Index k = 0;
    x.cwiseAbs().maxCoeff(&k);
    g[k] = sgn(x[k]);
  } else {
    for (Eigen::Index i = 0; i < x.size(); ++i)
      g[i] = sgn(x[i]) * std::pow(std::abs(x[i]) / nx, q_ - 1.0);
  }
  return g;
}

}  // namespace hilbertlab

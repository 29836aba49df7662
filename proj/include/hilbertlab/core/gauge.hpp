#pragma once

#include <cmath>
#include <string>

#include "hilbertlab/core/normed_space.hpp"

namespace hilbertlab {

/// A convex nonnegative function of the norm: ||x||^p, (||x||+1)log(||x||+1), or ||x||.
struct Gauge {
  enum class Kind { Power, LLogL, Norm };

  Kind kind = Kind::Power;
  double p = 2.0;  // exponent, used by Power only

  static Gauge power(double p) {
    if (!(p > 1.0)) throw Error(ErrorKind::InvalidArgument, "power gauge needs p > 1");
    return {Kind::Power, p};
  }
  static Gauge llogl() { return {Kind::LLogL, 1.0}; }
  static Gauge norm() { return {Kind::Norm, 1.0}; }

  /// Value as a function of r = ||x|| >= 0.
  double radial(double r) const {
    switch (kind) {
      case Kind::Power: return std::pow(r, p);
      case Kind::LLogL: return (r + 1.0) * std::log1p(r);
      case Kind::Norm: return r;
    }
    return 0.0;
  }

  /// d/dr of radial(r).
  double radial_derivative(double r) const {
    switch (kind) {
      case Kind::Power: return p * std::pow(r, p - 1.0);
      case Kind::LLogL: return std::log1p(r) + 1.0;
      case Kind::Norm: return 1.0;
    }
    return 0.0;
  }

  double at_zero() const { return radial(0.0); }

  /// Degree of homogeneity when the gauge is homogeneous, 0 otherwise.
  double homogeneity() const {
    switch (kind) {
      case Kind::Power: return p;
      case Kind::Norm: return 1.0;
      case Kind::LLogL: return 0.0;
    }
    return 0.0;
  }

  bool operator==(const Gauge&) const = default;
};

/// (Phi, Psi): Phi measures the input, Psi the output.
struct GaugePair {
  Gauge phi;
  Gauge psi;
};

std::string to_string(const Gauge& g);
Gauge parse_gauge(const std::string& text);
/// Accepts "power:3", "power:3/power:3", "llogl/norm".
GaugePair parse_gauge_pair(const std::string& text);

template <typename Derived>
double evaluate_gauge(const Gauge& g, const Eigen::MatrixBase<Derived>& x, const NormedSpace& space) {
  return g.radial(space.norm(x));
}

template <typename Derived>
Vector gauge_gradient(const Gauge& g, const Eigen::MatrixBase<Derived>& x, const NormedSpace& space) {
  const double r = space.norm(x);
  if (r == 0.0) return Vector::Zero(x.size());
  return g.radial_derivative(r) * space.norm_gradient(x);
}

}  // namespace hilbertlab

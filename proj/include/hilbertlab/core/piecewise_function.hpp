#pragma once

#include <numbers>
#include <string>
#include <vector>

#include "hilbertlab/core/gauge.hpp"
#include "hilbertlab/core/normed_space.hpp"

namespace hilbertlab {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class Domain { Torus, RealLine, Integers };

const char* to_string(Domain d);

/// One constant piece. On Torus/RealLine the support is [lo, hi); on Integers
/// lo == hi is the integer point.
struct Piece {
  double lo = 0.0;
  double hi = 0.0;
  Vector value;

  double measure(Domain d) const { return d == Domain::Integers ? 1.0 : hi - lo; }
};

/// Finite sum of vector values times indicators of disjoint intervals (or
/// integer points). Zero outside the listed pieces. The Torus is the window
/// [-pi, pi). Values at breakpoints are right limits.
class PiecewiseFunction {
 public:
  PiecewiseFunction(Domain domain, NormedSpace space, std::vector<Piece> pieces = {});

  /// Scalar convenience: pieces given as (lo, hi, value).
  static PiecewiseFunction scalar(Domain domain, std::initializer_list<std::tuple<double, double, double>> pieces);
  static PiecewiseFunction indicator(Domain domain, double lo, double hi, double value = 1.0);
  static PiecewiseFunction delta(long k, double value = 1.0);

  Domain domain() const { return domain_; }
  const NormedSpace& space() const { return space_; }
  int dim() const { return space_.dim(); }
  const std::vector<Piece>& pieces() const { return pieces_; }

  /// Sorted distinct interval endpoints (empty for Integers).
  std::vector<double> breakpoints() const;
  bool is_breakpoint(double t, double tol = 0.0) const;

  Vector operator()(double t) const;
  Vector zero() const { return Vector::Zero(dim()); }

  /// Sum of piece measures.
  double support_measure() const;
  /// Integral (or sum on Integers) of f, per coordinate.
  Vector integral() const;
  /// sup-norm of the values in the space norm.
  double sup_norm() const;
  /// Smallest interval containing every piece.
  std::pair<double, double> support_hull() const;

  PiecewiseFunction operator+(const PiecewiseFunction& other) const;
  PiecewiseFunction operator*(double a) const;
  PiecewiseFunction operator-(const PiecewiseFunction& other) const { return *this + other * -1.0; }
  /// t -> f(t - shift); RealLine and Integers only (Integers needs integral shift).
  PiecewiseFunction translated(double shift) const;
  /// t -> f(scale * t) for scale > 0, RealLine only.
  PiecewiseFunction dilated(double scale) const;

 private:
  void validate();

  Domain domain_;
  NormedSpace space_;
  std::vector<Piece> pieces_;
};

/// Exact integral of gauge(f) over the domain. On the Torus the zero value on
/// the complement contributes gauge(0) times its measure. Infinite results
/// (gauge(0) != 0 on an infinite domain) are reported, not thrown.
struct GaugeIntegral {
  double value = 0.0;
  bool infinite = false;
};

GaugeIntegral integrate_gauge(const PiecewiseFunction& f, const Gauge& g);

/// f - (1/2pi) int f over the Torus. The complement of the support becomes an
/// explicit piece carrying -mean.
PiecewiseFunction project_zero_mean(const PiecewiseFunction& f);

}  // namespace hilbertlab

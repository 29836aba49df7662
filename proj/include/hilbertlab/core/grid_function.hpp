#pragma once

#include "hilbertlab/core/piecewise_function.hpp"

namespace hilbertlab {

/// Uniform samples of a vector-valued function. Rows are sample points,
/// columns are coordinates of the value space.
///   Torus:    t_j = -pi + j h,           h = 2pi / len
///   RealLine: t_j = -L + (j + 1/2) h,    h = 2L / len (cell midpoints of [-L, L])
///   Integers: t_j = -N + j,              h = 1, len = 2N + 1
struct GridFunction {
  Domain domain = Domain::Torus;
  Matrix samples;
  double spacing = 0.0;
  double origin = 0.0;  // position of sample 0
  NormedSpace space;

  static GridFunction torus(Matrix samples, NormedSpace space = NormedSpace::scalar());
  static GridFunction real_line(Matrix samples, double half_width, NormedSpace space = NormedSpace::scalar());
  static GridFunction integers(Matrix samples, NormedSpace space = NormedSpace::scalar());

  Eigen::Index size() const { return samples.rows(); }
  double point(Eigen::Index j) const { return origin + static_cast<double>(j) * spacing; }
  Vector points() const;

  /// Column view for scalar grids.
  Eigen::VectorXd scalar_values() const { return samples.col(0); }
};

bool is_power_of_two(Eigen::Index n);

/// Samples f at the grid points using the right-limit convention.
GridFunction sample(const PiecewiseFunction& f, Eigen::Index len, double half_width = 0.0);

/// Torus only: sample j is the mean of f over [t_j - h/2, t_j + h/2). A jump
/// then sits at its true position to first order, which the FFT path needs to
/// match the closed form near breakpoints.
GridFunction cell_average(const PiecewiseFunction& f, Eigen::Index len);

/// Riemann sum h * sum_j gauge(f_j).
double integrate_gauge(const GridFunction& f, const Gauge& g);

}  // namespace hilbertlab

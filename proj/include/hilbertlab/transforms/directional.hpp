#pragma once

#include <vector>

#include "hilbertlab/core/box_function.hpp"

namespace hilbertlab {

/// H_theta f(x) = (1/pi) p.v. int f(x - t theta) dt / t. The line restriction
/// of a box function is a 1-D step function, transformed in closed form.
/// Throws SingularPoint if x sits on a box face or the line runs along one.
Vector directional_hilbert(const BoxFunction& f, const Vector& theta, const Vector& x);

/// amplitude * exp(-(y - mean)^T P (y - mean) / 2) on R^d with P symmetric
/// positive definite. Its directional transforms have the closed form
/// C (2/sqrt(pi)) F(b / sqrt(2a)) in terms of the Dawson integral F.
struct GaussianBump {
  Vector mean;
  Matrix precision;
  double amplitude = 1.0;

  static GaussianBump isotropic(int d, double sigma, double amplitude = 1.0);

  int dim() const { return static_cast<int>(mean.size()); }
  double operator()(const Vector& y) const;
  double directional_hilbert(const Vector& theta, const Vector& x) const;
  /// The bump composed with an orthogonal map A: y -> f(A y).
  GaussianBump composed_with(const Matrix& A) const;
};

/// Quadrature on S^{d-1} with weights summing to the sphere's surface area.
///   d = 2: n equispaced angles (trapezoid rule).
///   d = 3: n equispaced azimuths times n/2 Gauss-Legendre nodes in cos(polar).
struct SphereQuadrature {
  int d = 2;
  std::vector<Vector> nodes;
  std::vector<double> weights;

  static SphereQuadrature make(int d, int n);
};

/// Omega_{j,d}(theta) = pi Gamma((d+1)/2) / (2 pi^{(d+1)/2}) theta_j, the odd
/// kernel that turns the rotation average into the j-th Riesz transform.
double riesz_rotation_weight(int d, int j, const Vector& theta);

struct RieszValue {
  double value = 0.0;
  double error_estimate = 0.0;  // |Q_n - Q_{n/2}|
};

/// R_j f(x) as the sphere average of Omega_{j,d}(theta) H_theta f(x). j is 1-based.
RieszValue riesz_rotations(const BoxFunction& f, int j, const Vector& x, int n_nodes);
RieszValue riesz_rotations(const GaussianBump& f, int j, const Vector& x, int n_nodes);

/// Scalar samples on the periodic box [-L, L)^d, row-major, last index fastest.
struct PeriodicGrid {
  std::vector<long> extents;
  double half_width = 1.0;
  Eigen::VectorXd samples;

  int dim() const { return static_cast<int>(extents.size()); }
  long size() const;
  Vector point(long flat_index) const;
  static PeriodicGrid sample(const GaussianBump& f, const std::vector<long>& extents, double half_width);
};

/// Fourier multiplier -i xi_j / |xi| (xi = 0 -> 0, Nyquist modes zeroed).
/// Extents must be powers of two; d in {2, 3}; j is 1-based.
PeriodicGrid riesz_multiplier(const PeriodicGrid& f, int j);

/// 2 Gamma((m+d)/2) / (Gamma(d/2) Gamma(m/2)) for odd m >= 1, via log-gamma.
double riesz_power_constant(int m, int d);

}  // namespace hilbertlab

#pragma once

#include "hilbertlab/core/box_function.hpp"
#include "hilbertlab/core/piecewise_function.hpp"

namespace hilbertlab {

/// (1/pi) p.v. int f(s)/(t - s) ds for a RealLine step function, in closed form
///   (1/pi) sum_k x_k log| (t - a_k) / (t - b_k) |.
Vector real_hilbert_step(const PiecewiseFunction& f, double t);

/// (1/pi) sum_{s != t} f(s)/(t - s) for a finitely supported Integers function.
Vector discrete_hilbert(const PiecewiseFunction& f, long t);

/// (1/pi) sum_{k != 0} eps f(t - eps k) / (eps k). The support is bounded so
/// the lattice sum is finite; each piece contributes a harmonic-number
/// difference evaluated without truncation.
Vector semidiscrete_hilbert(const PiecewiseFunction& f, double eps, double t);

/// Hilbert operator on the half line, (1/pi) int_0^inf f(y)/(x + y) dy, x > 0.
/// The pieces of f must lie in [0, inf).
Vector hilbert_operator_T(const PiecewiseFunction& f, double x);

/// Half-space operator
///   T_j f(x) = Gamma((d+1)/2) / pi^{(d+1)/2} int_{y_j > 0} f(y) (x_j + y_j) / |x + y|^{d+1} dy
/// for a box step function supported in {y_j >= 0}, evaluated by nested
/// adaptive quadrature to the requested absolute tolerance. j is 1-based.
/// For d = 1 this reduces to the closed form above.
Vector hilbert_operator_T(const BoxFunction& f, const Vector& x, int j, double abs_tol = 1e-8);

/// Diagonals c[k + n - 1], k = -(n-1)..(n-1), of the n x n truncation of the
/// discrete Hilbert transform: c = 1/(pi k), c[0] = 0.
Eigen::VectorXd discrete_hilbert_kernel(long n);

/// Diagonals of the real-line transform compressed onto n unit cells:
///   (1/pi) [g(k+1) - 2 g(k) + g(k-1)],  g(x) = x log|x|.
/// Scale-free, so the cell width does not enter.
Eigen::VectorXd real_hilbert_cell_kernel(long n);

}  // namespace hilbertlab

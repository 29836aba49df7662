#pragma once

#include <functional>
#include <utility>

#include <Eigen/Dense>

namespace hilbertlab::quad {

struct Rule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
Rule gauss_legendre(int n);

struct Result {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) on [a, b] (GSL qag); stops when the
/// error estimate is below max(abs_tol, rel_tol |I|) or the interval budget runs out.
Result adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol = 1e-10,
                double rel_tol = 1e-10, int max_intervals = 4000);

/// Double-exponential (tanh-sinh) rule on [a, b], Boost.Math. Tolerates integrable
/// endpoint singularities such as log|x - a|; f is never evaluated at a or b.
Result tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol = 1e-12);

}  // namespace hilbertlab::quad

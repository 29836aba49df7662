#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace hilbertlab::mc {

/// A Monte Carlo estimate with its bootstrap standard error.
struct Estimate {
  double value = 0.0;
  double sigma = 0.0;
  double lo() const { return value - 3.0 * sigma; }
  double hi() const { return value + 3.0 * sigma; }
};

/// Nonparametric bootstrap of a statistic of column means. samples is n x m
/// (one row per path); statistic maps the m column means to a number. Resample
/// indices come from a seeded 64-bit Mersenne twister, so the result is
/// reproducible.
Estimate bootstrap(const Eigen::MatrixXd& samples, const std::function<double(const Eigen::VectorXd&)>& statistic,
                   int resamples = 400, std::uint64_t seed = 7);

/// Mean with the plain standard error sd / sqrt(n).
Estimate mean_estimate(const std::vector<double>& x);

struct ChiSquare {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

/// Pearson test of observed counts against cell probabilities (summing to 1).
ChiSquare chi_square(const std::vector<long>& counts, const std::vector<double>& probabilities);

}  // namespace hilbertlab::mc

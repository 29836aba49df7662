#include "hilbertlab/mcsim/stats.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include <boost/math/special_functions/gamma.hpp>

#include "hilbertlab/core/error.hpp"

namespace hilbertlab::mc {

Estimate bootstrap(const Eigen::MatrixXd& samples, const std::function<double(const Eigen::VectorXd&)>& statistic,
                   int resamples, std::uint64_t seed) {
  const Eigen::Index n = samples.rows();
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "bootstrap needs at least 2 samples");
  if (resamples < 2) throw Error(ErrorKind::InvalidArgument, "bootstrap needs at least 2 resamples");
  Estimate e;
  e.value = statistic(samples.colwise().mean().transpose());
  std::mt19937_64 gen(seed);
  const auto un = static_cast<std::uint64_t>(n);
  double sum = 0.0, sum_sq = 0.0;
  Eigen::VectorXd acc(samples.cols());
  for (int r = 0; r < resamples; ++r) {
    acc.setZero();
    // Modulo bias is below 2^-40 for any realistic n.
    for (Eigen::Index i = 0; i < n; ++i) acc += samples.row(static_cast<Eigen::Index>(gen() % un)).transpose();
    const double s = statistic(acc / static_cast<double>(n));
    sum += s;
    sum_sq += s * s;
  }
  const double mean = sum / resamples;
  e.sigma = std::sqrt(std::max(0.0, (sum_sq - resamples * mean * mean) / (resamples - 1)));
  return e;
}

Estimate mean_estimate(const std::vector<double>& x) {
  if (x.size() < 2) throw Error(ErrorKind::InvalidArgument, "need at least 2 samples");
  const double n = static_cast<double>(x.size());
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

ChiSquare chi_square(const std::vector<long>& counts, const std::vector<double>& probabilities) {
  if (counts.size() != probabilities.size() || counts.size() < 2)
    throw Error(ErrorKind::DimensionMismatch, "counts and probabilities must match and have >= 2 cells");
  const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  if (total <= 0.0) throw Error(ErrorKind::InvalidArgument, "no observations");
  ChiSquare c;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = total * probabilities[i];
    if (!(expected > 0.0)) throw Error(ErrorKind::InvalidArgument, "cell probabilities must be positive");
    const double d = static_cast<double>(counts[i]) - expected;
    c.statistic += d * d / expected;
  }
  c.dof = static_cast<int>(counts.size()) - 1;
  c.p_value = boost::math::gamma_q(0.5 * c.dof, 0.5 * c.statistic);
  return c;
}

}  // namespace hilbertlab::mc

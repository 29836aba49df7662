#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilbertlab/core/grid_function.hpp"
#include "hilbertlab/norms/operators.hpp"

namespace hilbertlab {

struct NormEstimate {
  double lower_bound = 0.0;
  int iterations = 0;
  double residual = 0.0;  // last relative change of the ratio
  GridFunction witness;
  long truncation = 0;
  bool converged = false;
};

enum class SeedKind { Random, OddSymmetric };

struct PowerIterationOptions {
  double tol = 1e-10;
  int max_iter = 5000;
  std::uint64_t seed = 20240601;
  SeedKind seed_kind = SeedKind::Random;
  /// Starting vector; overrides the seed when set (warm start).
  std::optional<Eigen::VectorXd> start;
};

/// Deterministic start vector: uniform(-1, 1) entries from a 64-bit seed,
/// antisymmetrized about the centre for SeedKind::OddSymmetric.
Eigen::VectorXd seed_vector(long n, std::uint64_t seed, SeedKind kind);

/// ||x||_p on plain sequences.
double sequence_norm(const Eigen::VectorXd& x, double p);

/// Nonlinear power method for the p -> p norm of a matrix:
///   g = A f,  f <- J_{p'}(A^T J_p(g))
/// with J_r(y) = |y|^{r-1} sgn y / ||y||_r^{r-1} and sgn 0 = 0. The Rayleigh
/// ratio ||A f||_p / ||f||_p never decreases; a decrease beyond rounding
/// throws with the offending iteration. The result is a lower bound for the
/// norm of A, reproduced exactly by the returned witness.
NormEstimate p_norm_power_iteration(const LinearOperator& op, double p, const PowerIterationOptions& options = {});

enum class Constraint { None, ZeroMean };

struct AscentOptions {
  NormedSpace space = NormedSpace::scalar();
  double tol = 1e-9;
  int max_iter = 20000;
  std::uint64_t seed = 20240601;
  std::optional<Matrix> start;
};

/// Projected gradient ascent on R(f) = sum Psi(A f) / sum Phi(f) over torus
/// grid functions with values in options.space, A applied coordinatewise.
/// Steps are accepted only when R does not decrease (backtracking). Under
/// ZeroMean every iterate is projected onto mean-zero functions. For
/// homogeneous gauges the iterate is renormalized after each step.
NormEstimate phi_psi_ratio_ascent(const LinearOperator& op, const GaugePair& gauges, Constraint constraint,
                                  const AscentOptions& options = {});

/// The Phi,Psi ratio of a torus grid function under op (sum form).
double phi_psi_ratio(const LinearOperator& op, const GaugePair& gauges, const Matrix& f, const NormedSpace& space);

struct OperatorSequence {
  std::string name;
  std::vector<long> sizes;
  std::vector<double> estimates;
  std::vector<bool> converged;
  bool nondecreasing = true;
};

struct ConsistencyReport {
  double p = 0.0;
  double target = 0.0;  // cot(pi / 2p*)
  std::vector<OperatorSequence> sequences;
  double spread = 0.0;  // (max - min) / max over the final estimates
  double band = 0.0;
  bool within_band = false;
  double max_gap_to_target = 0.0;  // max |final - target| / target
  bool below_ceiling = true;       // every estimate <= target + 1e-6
};

/// Runs the power method on the H^T, H^dis and H^R compressions at each size
/// (ascending). Each run is warm-started from the previous witness: zero
/// padded about the centre for the Toeplitz sections, cell-refined for the
/// torus, so every sequence is nondecreasing by construction. Band violations
/// are reported, not thrown.
ConsistencyReport cross_domain_consistency(double p, const std::vector<long>& sizes, double band,
                                           const PowerIterationOptions& options = {});

/// Embeds a witness of length m into length n >= m for the given operator
/// family so that the ratio cannot drop.
Eigen::VectorXd embed_witness(OperatorKind::Tag tag, const Eigen::VectorXd& x, long n);

}  // namespace hilbertlab

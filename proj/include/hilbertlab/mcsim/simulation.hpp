#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hilbertlab/core/piecewise_function.hpp"
#include "hilbertlab/mcsim/extensions.hpp"
#include "hilbertlab/mcsim/stats.hpp"

namespace hilbertlab {

struct SimConfig {
  double dt = 1e-4;
  long n_paths = 1000;
  std::uint64_t seed = 1;
  double boundary_tol = 0.05;  // stop at |W| >= 1 - boundary_tol

  /// dt > 0, n_paths >= 1, boundary_tol >= 4 sqrt(dt).
  void validate() const;
};

/// One planar Brownian path from the origin, Euler steps of size dt, stopped
/// at the first step with |W| >= 1 - boundary_tol. The stopping point is then
/// projected radially onto the circle; the rule is rotation invariant, so the
/// exit angle is exactly uniform whatever dt is.
struct DiscPath {
  std::vector<double> times;
  std::vector<Point2> points;  // last entry is the projected exit point
  double exit_angle = 0.0;
  double exit_time = 0.0;
};

DiscPath sample_exit_disc(const SimConfig& config, std::uint64_t path_index, bool record_path = true);

/// (M, N) = (u_f(W), conjugate of u_f at W) along one disc path. Rows
/// [0, interior) are evaluated strictly inside the disc; the last row holds
/// the boundary values (f, H^T f) at the exit angle.
struct PathPair {
  std::vector<double> times;
  Matrix M;
  Matrix N;
  Eigen::Index interior = 0;
  double exit_angle = 0.0;
  bool resample = false;  // exit angle within 1e-9 of a breakpoint; no boundary row
};

PathPair simulate_pair(const PiecewiseFunction& f, const SimConfig& config, std::uint64_t path_index);

/// max over x* of |sum_k d<M,x*>_k d<N,x*>_k| over the interior increments.
double check_orthogonality(const PathPair& pair, const std::vector<Vector>& functionals);

struct SubordinationCheck {
  double min_increment = 0.0;  // most negative step of [<M,x*>] - [<N,x*>]
  long increments = 0;
  long below_threshold = 0;    // increments < threshold
};

/// Running difference of squared increments per functional, interior steps.
SubordinationCheck check_subordination(const PathPair& pair, const std::vector<Vector>& functionals,
                                       double threshold);

/// Aggregates of the two path diagnostics over config.n_paths pairs.
struct PairDiagnostics {
  double rms_covariation = 0.0;
  double mean_abs_covariation = 0.0;
  double min_increment = 0.0;
  double fraction_below = 0.0;  // fraction of increments < -10 dt
  long paths = 0;
};

PairDiagnostics pair_diagnostics(const PiecewiseFunction& f, const SimConfig& config,
                                 const std::vector<Vector>& functionals);

/// int_T Psi(H^T f) / int_T Phi(f), both exact up to tanh-sinh quadrature
/// between breakpoints.
double exact_boundary_ratio(const PiecewiseFunction& f, const GaugePair& gauges);

struct InequalityResult {
  mc::Estimate lhs;    // E Psi(N_tau)
  mc::Estimate rhs;    // E Phi(M_tau)
  mc::Estimate ratio;  // lhs / rhs, bootstrap sigma
  double boundary_ratio = 0.0;
  long paths = 0;
  long resampled = 0;
};

/// Terminal values of config.n_paths pairs; paths exiting at a breakpoint are
/// replaced by fresh path indices beyond n_paths.
InequalityResult mc_inequality(const PiecewiseFunction& f, const GaugePair& gauges, const SimConfig& config);

/// Elementary predictable integrand on the grid t_k = k dt, k < horizon/dt.
struct PredictableIntegrand {
  enum class Kind { Deterministic, SignOfPath, Custom };
  Kind kind = Kind::Deterministic;
  double horizon = 1.0;
  /// Deterministic: value on each of coefficients.size() equal subintervals.
  std::vector<double> coefficients{1.0};
  /// Custom: phi_k from the increments dW_0 .. dW_{k-1}.
  std::function<double(long, const std::vector<double>&)> rule;

  static PredictableIntegrand deterministic(std::vector<double> coefficients, double horizon = 1.0);
  /// phi_k = sgn(W_{t_k}), with phi_0 = 1.
  static PredictableIntegrand sign_of_path(double horizon = 1.0);
  static PredictableIntegrand custom(std::function<double(long, const std::vector<double>&)> rule,
                                     double horizon = 1.0);
};

struct DecouplingResult {
  mc::Estimate beta_plus;   // (E|int phi dW~|^p / E|int phi dW|^p)^{1/p}
  mc::Estimate beta_minus;  // reciprocal direction
  double moment_w = 0.0;
  double moment_tilde = 0.0;
  bool degenerate = false;  // both integrals vanish identically
  long paths = 0;
};

/// Riemann-Ito sums against W and an independent copy W~ on the same grid.
DecouplingResult estimate_decoupling_gamma(const PredictableIntegrand& phi, double p, const SimConfig& config);

struct TauResult {
  mc::Estimate e_tau;
  mc::Estimate e_tau_sq;
  mc::Estimate e_sqrt_tau;
  mc::Estimate e_abs_gamma;
  mc::Estimate product;  // E|gamma| E sqrt(tau)
  double c_lower = 0.0;  // sqrt(6 / (5 pi))
  long paths = 0;
};

/// Exit of 1-D Brownian motion from [-1, 1]. Between grid points the path is
/// a Brownian bridge; a crossing inside a step is detected with probability
/// exp(-2 d0 d1 / dt) per barrier, which removes the discrete-monitoring bias.
TauResult tau_moment_check(const SimConfig& config);

enum class HarmonicDomain { Disc, Square };

/// Exit point of planar Brownian motion from [-1, 1]^2 started at the centre,
/// stopped at |W|_inf >= 1 - boundary_tol and rescaled onto the boundary.
Point2 sample_exit_square(const SimConfig& config, std::uint64_t path_index);

/// Harmonic measure from the centre of [-1, 1]^2 of the boundary segment
/// {x = 1, s0 <= y <= s1} (each side carries 1/4).
double square_harmonic_measure(double s0, double s1);

struct HarmonicReport {
  HarmonicDomain domain = HarmonicDomain::Disc;
  mc::Estimate lhs;
  mc::Estimate rhs;
  mc::Estimate ratio;
  double bound = 0.0;
  bool within_bound = false;
  bool verified = false;  // orthogonality and subordination hold by construction
  mc::ChiSquare exit_fit;  // 32-cell test of the exit law against the harmonic measure
  long paths = 0;
};

/// Boundary data are Torus step functions of the exit angle arg(W_tau). On the
/// disc, a missing g means g = H^T f, and the run coincides with mc_inequality.
/// Any caller-supplied g (and every Square run) is labelled unverified.
HarmonicReport harmonic_inequality_check(HarmonicDomain domain, const PiecewiseFunction& f,
                                         const std::optional<PiecewiseFunction>& g, const GaugePair& gauges,
                                         const SimConfig& config, double bound);

}  // namespace hilbertlab

// One line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "hilbertlab/core/grid_function.hpp"
#include "hilbertlab/mcsim/simulation.hpp"
#include "hilbertlab/norms/constants.hpp"
#include "hilbertlab/norms/estimators.hpp"
#include "hilbertlab/transforms/directional.hpp"
#include "hilbertlab/transforms/periodic.hpp"

using namespace hilbertlab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, double limit_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("threw: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < limit_seconds;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("criterion %2d: %s  %s  [%.1f s, limit %.0f s%s]\n", id, pass ? "PASS" : "FAIL", o.detail.c_str(), secs,
              limit_seconds, in_time ? "" : ", too slow");
  std::fflush(stdout);
}

template <class... T>
std::string fmt(const char* f, T... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Eigen::VectorXd torus_samples(long n, const std::function<double(double)>& fn) {
  Eigen::VectorXd v(n);
  for (long i = 0; i < n; ++i) v[i] = fn(-kPi + kTwoPi * static_cast<double>(i) / static_cast<double>(n));
  return v;
}

PiecewiseFunction sign_step() {
  return PiecewiseFunction::scalar(Domain::Torus, {{-kPi, 0.0, -1.0}, {0.0, kPi, 1.0}});
}

// Power method over ascending sizes, each run warm-started from the last witness.
std::vector<double> warm_sequence(OperatorKind::Tag tag, double p, const std::vector<long>& sizes) {
  std::vector<double> out;
  std::optional<Eigen::VectorXd> prev;
  for (long n : sizes) {
    PowerIterationOptions opt;
    if (prev) opt.start = embed_witness(tag, *prev, n);
    const auto op = make_truncated_operator(tag, n);
    const NormEstimate e = p_norm_power_iteration(*op, p, opt);
    out.push_back(e.lower_bound);
    prev = e.witness.samples.col(0);
  }
  return out;
}

Outcome c1() {
  const long n = 512;
  double worst = 0.0;
  for (int k = 1; k <= 64; ++k) {
    const auto c = torus_samples(n, [k](double t) { return std::cos(k * t); });
    const auto s = torus_samples(n, [k](double t) { return std::sin(k * t); });
    worst = std::max(worst, (periodic_hilbert_fft(c) - s).cwiseAbs().maxCoeff());
    worst = std::max(worst, (periodic_hilbert_fft(s) + c).cwiseAbs().maxCoeff());
  }
  return {worst <= 1e-10, fmt("max error %.3e (<= 1e-10)", worst)};
}

Outcome c2() {
  const auto f = PiecewiseFunction::scalar(Domain::Torus,
                                           {{-kPi / 2, 0.0, -1.0}, {0.0, kPi / 2, 1.0}, {3 * kPi / 4, kPi, 0.5}});
  const double zone = 4 * kTwoPi / 1024;
  auto discrepancy = [&](long n) {
    const GridFunction g = cell_average(f, n);
    const Eigen::VectorXd h = periodic_hilbert_fft(g.scalar_values());
    double worst = 0.0;
    for (long i = 0; i < n; ++i) {
      const double t = g.point(i);
      bool near = false;
      for (double b : f.breakpoints()) near = near || std::abs(std::remainder(t - b, kTwoPi)) <= zone;
      if (!near) worst = std::max(worst, std::abs(h[i] - periodic_hilbert_step(f, t)[0]));
    }
    return worst;
  };
  const double e1 = discrepancy(1024), e2 = discrepancy(2048);
  return {e1 <= 5e-2 && e2 < e1, fmt("max discrepancy %.4e at 1024 (<= 5e-2), %.4e at 2048 (strictly smaller)", e1, e2)};
}

Outcome c3() {
  const auto op = make_truncated_operator(OperatorKind::Tag::DiscreteHilbert, 1024);
  const double e = p_norm_power_iteration(*op, 2.0).lower_bound;
  return {e >= 0.995 && e <= 1.0 + 1e-9, fmt("estimate %.9f in [0.995, 1 + 1e-9]", e)};
}

Outcome c4() {
  const double c = 1.0 + std::sqrt(2.0);
  const auto seq = warm_sequence(OperatorKind::Tag::DiscreteHilbert, 4.0, {512, 1024, 2048, 4096});
  bool mono = true;
  for (std::size_t i = 1; i < seq.size(); ++i) mono = mono && seq[i] >= seq[i - 1];
  const double last = seq.back();
  const bool in = last >= 0.95 * c && last <= c + 1e-6;
  return {in && mono, fmt("estimates %.6f %.6f %.6f %.6f; N=4096 in [%.6f, %.6f]: %s; nondecreasing: %s", seq[0],
                          seq[1], seq[2], seq[3], 0.95 * c, c + 1e-6, in ? "yes" : "no", mono ? "yes" : "no")};
}

Outcome c5() {
  const ConsistencyReport r = cross_domain_consistency(3.0, {512, 1024, 2048, 4096}, 0.02);
  std::ostringstream s;
  for (const auto& q : r.sequences) s << q.name << "=" << fmt("%.5f", q.estimates.back()) << " ";
  const bool ok = r.max_gap_to_target <= 0.03 && r.spread <= 0.02;
  s << fmt("gap to sqrt(3) %.2f%% (<= 3%%), spread %.2f%% (<= 2%%)", 100 * r.max_gap_to_target, 100 * r.spread);
  return {ok, s.str()};
}

Outcome c6() {
  const auto op = make_grid_operator(512);
  const GaugePair g{Gauge::power(3), Gauge::power(3)};
  const double a = phi_psi_ratio_ascent(*op, g, Constraint::None).lower_bound;
  const double b = phi_psi_ratio_ascent(*op, g, Constraint::ZeroMean).lower_bound;
  const double rel = std::abs(a - b) / std::max(a, b);
  return {rel <= 0.02, fmt("none %.6f, zero-mean %.6f, relative difference %.3e (<= 2e-2)", a, b, rel)};
}

Outcome c7() {
  SimConfig cfg;
  cfg.dt = 1e-4;
  cfg.n_paths = 100000;
  cfg.seed = 1;
  const TauResult r = tau_moment_check(cfg);
  const bool a = std::abs(r.e_tau.value - 1.0) <= 3 * r.e_tau.sigma;
  const bool b = std::abs(r.e_tau_sq.value - 5.0 / 3.0) <= 3 * r.e_tau_sq.sigma;
  const bool c = r.product.value >= 0.618 - 3 * r.product.sigma;
  return {a && b && c, fmt("E tau %.5f +- %.5f, E tau^2 %.5f +- %.5f (target 5/3), E|g| E sqrt(tau) %.5f +- %.5f (>= 0.618)",
                           r.e_tau.value, r.e_tau.sigma, r.e_tau_sq.value, r.e_tau_sq.sigma, r.product.value,
                           r.product.sigma)};
}

Outcome c8() {
  SimConfig cfg;
  cfg.dt = 1e-4;
  cfg.n_paths = 10000;
  cfg.seed = 1;
  const auto f = sign_step();
  const InequalityResult two = mc_inequality(f, {Gauge::power(2), Gauge::power(2)}, cfg);
  const InequalityResult three = mc_inequality(f, {Gauge::power(3), Gauge::power(3)}, cfg);
  const double ceiling3 = std::pow(pichorides_constant(3.0), 3.0);
  const bool a = std::abs(two.ratio.value - two.boundary_ratio) <= 3 * two.ratio.sigma;
  const bool b = two.ratio.value <= 1.0 + 3 * two.ratio.sigma;
  const bool c = three.ratio.value <= ceiling3 + 3 * three.ratio.sigma;
  return {a && b && c, fmt("p=2 ratio %.5f +- %.5f vs exact %.5f and <= 1; p=3 ratio %.5f +- %.5f <= %.5f", two.ratio.value,
                           two.ratio.sigma, two.boundary_ratio, three.ratio.value, three.ratio.sigma, ceiling3)};
}

Outcome c9() {
  SimConfig cfg;
  cfg.dt = 1e-4;
  cfg.n_paths = 1000;
  cfg.seed = 1;
  SimConfig fine = cfg;
  fine.dt = cfg.dt / 4.0;
  const auto f = sign_step();
  const std::vector<Vector> functionals{Vector::Ones(1)};
  const PairDiagnostics coarse = pair_diagnostics(f, cfg, functionals);
  const PairDiagnostics quarter = pair_diagnostics(f, fine, functionals);
  const double ratio = quarter.rms_covariation / coarse.rms_covariation;
  const bool a = std::abs(ratio / 0.5 - 1.0) <= 0.3;
  const bool b = coarse.fraction_below <= 0.01;
  return {a && b, fmt("covariation ratio %.4f (0.5 +- 30%%), fraction of increments below -10 dt %.4f (<= 0.01)", ratio,
                      coarse.fraction_below)};
}

Outcome c10() {
  SimConfig cfg;
  cfg.dt = 1e-3;
  cfg.n_paths = 100000;
  cfg.seed = 1;
  cfg.boundary_tol = 0.13;
  const DecouplingResult det = estimate_decoupling_gamma(PredictableIntegrand::deterministic({1.0, 2.0, 0.5}), 2.0, cfg);
  const DecouplingResult adapt = estimate_decoupling_gamma(PredictableIntegrand::sign_of_path(), 3.0, cfg);
  const bool a = std::abs(det.beta_plus.value - 1.0) <= 0.02 && std::abs(det.beta_minus.value - 1.0) <= 0.02;
  const mc::Estimate& m = adapt.beta_plus.value >= adapt.beta_minus.value ? adapt.beta_plus : adapt.beta_minus;
  const bool b = m.value <= std::sqrt(3.0) + 3 * m.sigma;
  return {a && b, fmt("deterministic p=2: %.5f, %.5f (1 +- 2%%); adapted p=3 max %.5f +- %.5f (<= sqrt(3))",
                      det.beta_plus.value, det.beta_minus.value, m.value, m.sigma)};
}

Outcome c11() {
  const double k = riesz_power_constant(1, 2);
  const bool a = std::abs(k - 1.0) <= 1e-12;
  const GaussianBump g = GaussianBump::isotropic(2, 0.5);
  const PeriodicGrid grid = PeriodicGrid::sample(g, {256, 256}, 16.0);
  double worst = 0.0;
  double expansion = 0.0;
  for (int j : {1, 2}) {
    const PeriodicGrid r = riesz_multiplier(grid, j);
    expansion = std::max(expansion, r.samples.norm() / grid.samples.norm() - 1.0);
    for (long row : {120L, 128L, 136L, 144L})
      for (long col : {120L, 128L, 131L, 140L}) {
        const long idx = row * 256 + col;
        worst = std::max(worst, std::abs(riesz_rotations(g, j, grid.point(idx), 256).value - r.samples[idx]));
      }
  }
  const bool b = worst <= 1e-3;
  const bool c = expansion <= 1e-14;
  return {a && b && c, fmt("constant %.15f; rotations vs multiplier %.3e (<= 1e-3); ||Rf||/||f|| - 1 = %.3e (<= 1e-14 rounding)", k,
                           worst, expansion)};
}

}  // namespace

int main() {
  criterion(1, 1, c1);
  criterion(2, 5, c2);
  criterion(3, 30, c3);
  criterion(4, 300, c4);
  criterion(5, 300, c5);
  criterion(6, 120, c6);
  criterion(7, 120, c7);
  criterion(8, 180, c8);
  criterion(9, 180, c9);
  criterion(10, 120, c10);
  criterion(11, 30, c11);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures;
}

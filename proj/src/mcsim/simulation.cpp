#include "hilbertlab/mcsim/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "hilbertlab/mcsim/rng.hpp"
#include "hilbertlab/numerics/quadrature.hpp"
#include "hilbertlab/transforms/periodic.hpp"

namespace hilbertlab {

namespace {

// One RNG stream per experiment so runs never share draws.
constexpr std::uint32_t kStreamDisc = 0;
constexpr std::uint32_t kStreamSquare = 1;
constexpr std::uint32_t kStreamTau = 2;
constexpr std::uint32_t kStreamGamma = 3;
constexpr std::uint32_t kStreamDecoupling = 4;

constexpr std::uint32_t kMaxSteps = std::numeric_limits<std::uint32_t>::max();

std::uint32_t step_index(long k) {
  if (k >= static_cast<long>(kMaxSteps)) throw Error(ErrorKind::Domain, "path exceeded the step budget");
  return static_cast<std::uint32_t>(k);
}

double signed_unit(double v) { return v >= 0.0 ? 1.0 : -1.0; }

}  // namespace

void SimConfig::validate() const {
  if (!(dt > 0.0)) throw Error(ErrorKind::InvalidArgument, "dt must be positive");
  if (n_paths < 1) throw Error(ErrorKind::InvalidArgument, "n_paths must be >= 1");
  if (!(boundary_tol < 1.0)) throw Error(ErrorKind::InvalidArgument, "boundary_tol must be below 1");
  if (boundary_tol < 4.0 * std::sqrt(dt) * (1.0 - 1e-12))
    throw Error(ErrorKind::InvalidArgument, "boundary_tol must be at least 4 sqrt(dt)");
}

DiscPath sample_exit_disc(const SimConfig& config, std::uint64_t path_index, bool record_path) {
  config.validate();
  const mc::PathRng rng(config.seed, path_index, kStreamDisc);
  const double s = std::sqrt(config.dt);
  const double stop = 1.0 - config.boundary_tol;
  DiscPath path;
  Point2 w(0.0, 0.0);
  double t = 0.0;
  if (record_path) {
    path.times.push_back(0.0);
    path.points.push_back(w);
  }
  for (long k = 0;; ++k) {
    const auto z = rng.normal_pair(step_index(k));
    w += s * Point2(z[0], z[1]);
    t += config.dt;
    if (std::abs(w) >= stop) break;
    if (record_path) {
      path.times.push_back(t);
      path.points.push_back(w);
    }
  }
  path.exit_angle = std::arg(w);
  path.exit_time = t;
  if (record_path) {
    path.times.push_back(t);
    path.points.push_back(std::polar(1.0, path.exit_angle));
  }
  return path;
}

PathPair simulate_pair(const PiecewiseFunction& f, const SimConfig& config, std::uint64_t path_index) {
  if (f.domain() != Domain::Torus) throw Error(ErrorKind::Domain, "simulate_pair takes Torus boundary data");
  const DiscPath path = sample_exit_disc(config, path_index, true);
  PathPair pair;
  pair.exit_angle = path.exit_angle;
  pair.resample = f.is_breakpoint(path.exit_angle, 1e-9);
  pair.interior = static_cast<Eigen::Index>(path.points.size()) - 1;
  const Eigen::Index rows = pair.interior + (pair.resample ? 0 : 1);
  pair.M.resize(rows, f.dim());
  pair.N.resize(rows, f.dim());
  pair.times.assign(path.times.begin(), path.times.begin() + rows);
  for (Eigen::Index k = 0; k < pair.interior; ++k) {
    pair.M.row(k) = poisson_extension(f, path.points[static_cast<std::size_t>(k)]).transpose();
    pair.N.row(k) = conjugate_extension(f, path.points[static_cast<std::size_t>(k)]).transpose();
  }
  if (!pair.resample) {
    pair.M.row(pair.interior) = f(path.exit_angle).transpose();
    pair.N.row(pair.interior) = periodic_hilbert_step(f, path.exit_angle).transpose();
  }
  return pair;
}

double check_orthogonality(const PathPair& pair, const std::vector<Vector>& functionals) {
  double worst = 0.0;
  const Eigen::Index n = pair.interior;
  for (const Vector& x : functionals) {
    if (x.size() != pair.M.cols()) throw Error(ErrorKind::DimensionMismatch, "functional has the wrong dimension");
    if (n < 2) continue;
    const Eigen::VectorXd a = pair.M.topRows(n) * x;
    const Eigen::VectorXd b = pair.N.topRows(n) * x;
    const Eigen::VectorXd da = a.tail(n - 1) - a.head(n - 1);
    const Eigen::VectorXd db = b.tail(n - 1) - b.head(n - 1);
    worst = std::max(worst, std::abs(da.dot(db)));
  }
  return worst;
}

SubordinationCheck check_subordination(const PathPair& pair, const std::vector<Vector>& functionals,
                                       double threshold) {
  SubordinationCheck out;
  const Eigen::Index n = pair.interior;
  for (const Vector& x : functionals) {
    if (x.size() != pair.M.cols()) throw Error(ErrorKind::DimensionMismatch, "functional has the wrong dimension");
    if (n < 2) continue;
    const Eigen::VectorXd a = pair.M.topRows(n) * x;
    const Eigen::VectorXd b = pair.N.topRows(n) * x;
    for (Eigen::Index k = 1; k < n; ++k) {
      const double da = a[k] - a[k - 1], db = b[k] - b[k - 1];
      const double inc = da * da - db * db;
      out.min_increment = std::min(out.min_increment, inc);
      if (inc < threshold) ++out.below_threshold;
      ++out.increments;
    }
  }
  return out;
}

PairDiagnostics pair_diagnostics(const PiecewiseFunction& f, const SimConfig& config,
                                 const std::vector<Vector>& functionals) {
  config.validate();
  PairDiagnostics d;
  double sum_sq = 0.0, sum_abs = 0.0;
  long below = 0, total = 0;
  for (long i = 0; i < config.n_paths; ++i) {
    const PathPair pair = simulate_pair(f, config, static_cast<std::uint64_t>(i));
    const double c = check_orthogonality(pair, functionals);
    sum_sq += c * c;
    sum_abs += c;
    const SubordinationCheck s = check_subordination(pair, functionals, -10.0 * config.dt);
    d.min_increment = std::min(d.min_increment, s.min_increment);
    below += s.below_threshold;
    total += s.increments;
  }
  d.paths = config.n_paths;
  d.rms_covariation = std::sqrt(sum_sq / static_cast<double>(config.n_paths));
  d.mean_abs_covariation = sum_abs / static_cast<double>(config.n_paths);
  d.fraction_below = total > 0 ? static_cast<double>(below) / static_cast<double>(total) : 0.0;
  return d;
}

double exact_boundary_ratio(const PiecewiseFunction& f, const GaugePair& gauges) {
  if (f.domain() != Domain::Torus) throw Error(ErrorKind::Domain, "boundary ratio is defined for Torus data");
  const GaugeIntegral den = integrate_gauge(f, gauges.phi);
  if (den.value == 0.0) throw Error(ErrorKind::Domain, "Phi integral vanishes");
  std::set<double> nodes;
  for (double b : f.breakpoints()) nodes.insert(b >= kPi ? b - kTwoPi : b);
  double num = 0.0;
  if (nodes.empty()) {
    num = kTwoPi * gauges.psi.at_zero();
  } else {
    std::vector<double> v(nodes.begin(), nodes.end());
    v.push_back(v.front() + kTwoPi);
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      const double a = v[i], b = v[i + 1];
      if (b - a <= 0.0) continue;
      // The outermost nodes sit within rounding of a breakpoint, where the
      // transform is undefined; their weights are below 1e-30.
      auto integrand = [&](double t) {
        if (t - a < 1e-14 || b - t < 1e-14) return 0.0;
        return evaluate_gauge(gauges.psi, periodic_hilbert_step(f, t), f.space());
      };
      num += quad::tanh_sinh(integrand, a, b, 1e-11).value;
    }
  }
  return num / den.value;
}

namespace {

// Terminal gauge samples (Psi(g), Phi(f)) at disc exit angles. With no g the
// conjugate boundary values H^T f are used and breakpoint exits are redrawn.
struct Terminals {
  Eigen::MatrixXd samples;  // columns: Psi(second), Phi(first)
  std::vector<double> angles;
  long resampled = 0;
};

Terminals disc_terminals(const PiecewiseFunction& f, const PiecewiseFunction* g, const GaugePair& gauges,
                         const SimConfig& config) {
  config.validate();
  Terminals out;
  out.samples.resize(config.n_paths, 2);
  out.angles.reserve(static_cast<std::size_t>(config.n_paths));
  auto extra = static_cast<std::uint64_t>(config.n_paths);
  for (long i = 0; i < config.n_paths; ++i) {
    auto idx = static_cast<std::uint64_t>(i);
    DiscPath path = sample_exit_disc(config, idx, false);
    while (!g && f.is_breakpoint(path.exit_angle, 1e-9)) {
      ++out.resampled;
      path = sample_exit_disc(config, extra++, false);
    }
    const double a = path.exit_angle;
    const Vector second = g ? (*g)(a) : periodic_hilbert_step(f, a);
    out.samples(i, 0) = evaluate_gauge(gauges.psi, second, f.space());
    out.samples(i, 1) = evaluate_gauge(gauges.phi, f(a), f.space());
    out.angles.push_back(a);
  }
  return out;
}

mc::Estimate column_mean(const Eigen::MatrixXd& s, Eigen::Index c) {
  const Eigen::VectorXd col = s.col(c);
  return mc::mean_estimate(std::vector<double>(col.data(), col.data() + col.size()));
}

mc::Estimate ratio_estimate(const Eigen::MatrixXd& s, std::uint64_t seed) {
  if (s.col(1).mean() == 0.0) throw Error(ErrorKind::Domain, "E Phi(M) vanishes; ratio undefined");
  return mc::bootstrap(s, [](const Eigen::VectorXd& m) { return m[0] / m[1]; }, 400, seed);
}

mc::ChiSquare uniform_angle_fit(const std::vector<double>& angles) {
  constexpr int kBins = 32;
  std::vector<long> counts(kBins, 0);
  for (double a : angles) {
    int b = static_cast<int>(std::floor((a + kPi) / kTwoPi * kBins));
    counts[static_cast<std::size_t>(std::clamp(b, 0, kBins - 1))]++;
  }
  return mc::chi_square(counts, std::vector<double>(kBins, 1.0 / kBins));
}

}  // namespace

InequalityResult mc_inequality(const PiecewiseFunction& f, const GaugePair& gauges, const SimConfig& config) {
  if (f.domain() != Domain::Torus) throw Error(ErrorKind::Domain, "mc_inequality takes Torus boundary data");
  if (gauges.psi.at_zero() != 0.0) throw Error(ErrorKind::InvalidArgument, "Psi must vanish at 0");
  const Terminals t = disc_terminals(f, nullptr, gauges, config);
  InequalityResult r;
  r.lhs = column_mean(t.samples, 0);
  r.rhs = column_mean(t.samples, 1);
  r.ratio = ratio_estimate(t.samples, config.seed);
  r.boundary_ratio = exact_boundary_ratio(f, gauges);
  r.paths = config.n_paths;
  r.resampled = t.resampled;
  return r;
}

PredictableIntegrand PredictableIntegrand::deterministic(std::vector<double> coefficients, double horizon) {
  if (coefficients.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one coefficient");
  PredictableIntegrand p;
  p.kind = Kind::Deterministic;
  p.coefficients = std::move(coefficients);
  p.horizon = horizon;
  return p;
}

PredictableIntegrand PredictableIntegrand::sign_of_path(double horizon) {
  PredictableIntegrand p;
  p.kind = Kind::SignOfPath;
  p.horizon = horizon;
  return p;
}

PredictableIntegrand PredictableIntegrand::custom(std::function<double(long, const std::vector<double>&)> rule,
                                                  double horizon) {
  if (!rule) throw Error(ErrorKind::InvalidArgument, "custom integrand needs a rule");
  PredictableIntegrand p;
  p.kind = Kind::Custom;
  p.rule = std::move(rule);
  p.horizon = horizon;
  return p;
}

DecouplingResult estimate_decoupling_gamma(const PredictableIntegrand& phi, double p, const SimConfig& config) {
  if (!(p >= 1.0) || std::isinf(p)) throw Error(ErrorKind::InvalidArgument, "moment exponent must be finite and >= 1");
  if (!(config.dt > 0.0) || config.n_paths < 2) throw Error(ErrorKind::InvalidArgument, "need dt > 0 and >= 2 paths");
  if (!(phi.horizon > 0.0)) throw Error(ErrorKind::InvalidArgument, "horizon must be positive");
  const long steps = std::max(1L, std::lround(phi.horizon / config.dt));
  const double s = std::sqrt(phi.horizon / static_cast<double>(steps));
  const auto m = static_cast<long>(phi.coefficients.size());

  Eigen::MatrixXd samples(config.n_paths, 2);  // |I|^p against W, against W~
  std::vector<double> past;
  for (long i = 0; i < config.n_paths; ++i) {
    const mc::PathRng rng(config.seed, static_cast<std::uint64_t>(i), kStreamDecoupling);
    double integral = 0.0, tilde = 0.0, w = 0.0;
    past.clear();
    for (long k = 0; k < steps; ++k) {
      double c = 1.0;
      switch (phi.kind) {
        case PredictableIntegrand::Kind::Deterministic: c = phi.coefficients[static_cast<std::size_t>(k * m / steps)]; break;
        case PredictableIntegrand::Kind::SignOfPath: c = k == 0 ? 1.0 : signed_unit(w); break;
        case PredictableIntegrand::Kind::Custom: c = phi.rule(k, past); break;
      }
      const auto z = rng.normal_pair(step_index(k));
      const double dw = s * z[0];
      integral += c * dw;
      tilde += c * s * z[1];
      w += dw;
      if (phi.kind == PredictableIntegrand::Kind::Custom) past.push_back(dw);
    }
    samples(i, 0) = std::pow(std::abs(integral), p);
    samples(i, 1) = std::pow(std::abs(tilde), p);
  }
  DecouplingResult r;
  r.paths = config.n_paths;
  r.moment_w = samples.col(0).mean();
  r.moment_tilde = samples.col(1).mean();
  if (r.moment_w == 0.0 || r.moment_tilde == 0.0) {
    r.degenerate = true;
    r.beta_plus = r.beta_minus = {std::numeric_limits<double>::quiet_NaN(), 0.0};
    return r;
  }
  r.beta_plus = mc::bootstrap(samples, [p](const Eigen::VectorXd& mm) { return std::pow(mm[1] / mm[0], 1.0 / p); },
                              400, config.seed);
  r.beta_minus = mc::bootstrap(samples, [p](const Eigen::VectorXd& mm) { return std::pow(mm[0] / mm[1], 1.0 / p); },
                               400, config.seed + 1);
  return r;
}

TauResult tau_moment_check(const SimConfig& config) {
  if (!(config.dt > 0.0) || config.n_paths < 2) throw Error(ErrorKind::InvalidArgument, "need dt > 0 and >= 2 paths");
  const double dt = config.dt, s = std::sqrt(dt);
  // Beyond d0 d1 > 20 dt the crossing probability is below e^-40.
  const double far = 20.0 * dt;
  auto crossing = [&](double d0, double d1) { return d0 * d1 > far ? 0.0 : std::exp(-2.0 * d0 * d1 / dt); };

  Eigen::MatrixXd samples(config.n_paths, 4);  // tau, tau^2, sqrt(tau), |gamma|
  for (long i = 0; i < config.n_paths; ++i) {
    const mc::PathRng rng(config.seed, static_cast<std::uint64_t>(i), kStreamTau);
    double x = 0.0, t = 0.0;
    bool done = false;
    for (long m = 0; !done; ++m) {
      const auto b = rng.block(step_index(m));
      const auto z = mc::PathRng::box_muller(b[0], b[1]);
      for (int h = 0; h < 2 && !done; ++h) {
        const double x1 = x + s * z[static_cast<std::size_t>(h)];
        t += dt;
        if (std::abs(x1) >= 1.0) {
          done = true;
          break;
        }
        const double pu = crossing(1.0 - x, 1.0 - x1);
        const double pl = crossing(1.0 + x, 1.0 + x1);
        if (pu + pl > 0.0 && mc::to_unit(b[static_cast<std::size_t>(2 + h)]) < pu + pl - pu * pl) {
          done = true;
          break;
        }
        x = x1;
      }
    }
    const double gamma = mc::PathRng(config.seed, static_cast<std::uint64_t>(i), kStreamGamma).normal_pair(0)[0];
    samples(i, 0) = t;
    samples(i, 1) = t * t;
    samples(i, 2) = std::sqrt(t);
    samples(i, 3) = std::abs(gamma);
  }
  TauResult r;
  r.paths = config.n_paths;
  r.e_tau = column_mean(samples, 0);
  r.e_tau_sq = column_mean(samples, 1);
  r.e_sqrt_tau = column_mean(samples, 2);
  r.e_abs_gamma = column_mean(samples, 3);
  const Eigen::MatrixXd pair = samples.rightCols(2);
  r.product = mc::bootstrap(pair, [](const Eigen::VectorXd& m) { return m[0] * m[1]; }, 400, config.seed);
  r.c_lower = std::sqrt(6.0 / (5.0 * kPi));
  return r;
}

Point2 sample_exit_square(const SimConfig& config, std::uint64_t path_index) {
  config.validate();
  const mc::PathRng rng(config.seed, path_index, kStreamSquare);
  const double s = std::sqrt(config.dt);
  const double stop = 1.0 - config.boundary_tol;
  double x = 0.0, y = 0.0;
  for (long k = 0;; ++k) {
    const auto z = rng.normal_pair(step_index(k));
    x += s * z[0];
    y += s * z[1];
    const double r = std::max(std::abs(x), std::abs(y));
    // Rescaling keeps the relative position on the side, which is what the
    // centre-started harmonic measure of a smaller square sees.
    if (r >= stop) return {x / r, y / r};
  }
}

double square_harmonic_measure(double s0, double s1) {
  auto cdf = [](double s) {
    s = std::clamp(s, -1.0, 1.0);
    double acc = 0.0;
    // sinh(n pi/2)/sinh(n pi) = 1/(2 cosh(n pi/2)); odd n only.
    for (int n = 1; n < 80; n += 2) {
      const double c = (n % 4 == 1 ? 1.0 : -1.0) / (2.0 * std::cosh(0.5 * n * kPi));
      acc += c * 2.0 / (n * kPi) * (1.0 - std::cos(0.5 * n * kPi * (s + 1.0)));
    }
    return acc;
  };
  return cdf(s1) - cdf(s0);
}

namespace {

mc::ChiSquare square_exit_fit(const std::vector<Point2>& exits) {
  constexpr int kPerSide = 8;
  std::vector<long> counts(4 * kPerSide, 0);
  std::vector<double> probs(4 * kPerSide);
  for (int b = 0; b < kPerSide; ++b) {
    const double p = square_harmonic_measure(-1.0 + 2.0 * b / kPerSide, -1.0 + 2.0 * (b + 1) / kPerSide);
    for (int side = 0; side < 4; ++side) probs[static_cast<std::size_t>(side * kPerSide + b)] = p;
  }
  for (const Point2& e : exits) {
    int side = 0;
    double s = 0.0;
    if (std::abs(e.real()) >= std::abs(e.imag())) {
      side = e.real() > 0.0 ? 0 : 2;
      s = e.imag();
    } else {
      side = e.imag() > 0.0 ? 1 : 3;
      s = e.real();
    }
    const int b = std::clamp(static_cast<int>(std::floor((s + 1.0) / 2.0 * kPerSide)), 0, kPerSide - 1);
    counts[static_cast<std::size_t>(side * kPerSide + b)]++;
  }
  return mc::chi_square(counts, probs);
}

}  // namespace

HarmonicReport harmonic_inequality_check(HarmonicDomain domain, const PiecewiseFunction& f,
                                         const std::optional<PiecewiseFunction>& g, const GaugePair& gauges,
                                         const SimConfig& config, double bound) {
  if (f.domain() != Domain::Torus || (g && g->domain() != Domain::Torus))
    throw Error(ErrorKind::Domain, "boundary data are Torus step functions of the exit angle");
  if (g && !(g->space() == f.space())) throw Error(ErrorKind::DimensionMismatch, "f and g must share a value space");
  config.validate();
  HarmonicReport rep;
  rep.domain = domain;
  rep.bound = bound;
  Eigen::MatrixXd samples;
  if (domain == HarmonicDomain::Disc) {
    const Terminals t = disc_terminals(f, g ? &*g : nullptr, gauges, config);
    samples = t.samples;
    rep.exit_fit = uniform_angle_fit(t.angles);
    rep.verified = !g;
  } else {
    if (!g) throw Error(ErrorKind::InvalidArgument, "Square runs need explicit boundary data g");
    samples.resize(config.n_paths, 2);
    std::vector<Point2> exits;
    exits.reserve(static_cast<std::size_t>(config.n_paths));
    for (long i = 0; i < config.n_paths; ++i) {
      const Point2 e = sample_exit_square(config, static_cast<std::uint64_t>(i));
      const double a = std::arg(e);
      samples(i, 0) = evaluate_gauge(gauges.psi, (*g)(a), f.space());
      samples(i, 1) = evaluate_gauge(gauges.phi, f(a), f.space());
      exits.push_back(e);
    }
    rep.exit_fit = square_exit_fit(exits);
    rep.verified = false;
  }
  rep.paths = config.n_paths;
  rep.lhs = column_mean(samples, 0);
  rep.rhs = column_mean(samples, 1);
  rep.ratio = ratio_estimate(samples, config.seed);
  rep.within_bound = rep.ratio.value <= bound + 3.0 * rep.ratio.sigma;
  return rep;
}

}  // namespace hilbertlab

#include "hilbertlab/cli/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hilbertlab/cli/csv.hpp"
#include "hilbertlab/cli/manifest.hpp"
#include "hilbertlab/cli/report.hpp"
#include "hilbertlab/core/text_format.hpp"
#include "hilbertlab/mcsim/simulation.hpp"
#include "hilbertlab/norms/constants.hpp"
#include "hilbertlab/norms/estimators.hpp"
#include "hilbertlab/transforms/directional.hpp"
#include "hilbertlab/transforms/operator_kind.hpp"
#include "hilbertlab/transforms/periodic.hpp"
#include "hilbertlab/transforms/real_line.hpp"

namespace hilbertlab::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kTransformColumns =
    "CSV columns:\n"
    "  t | k | x1..xd    evaluation point (k for hdis, x1..xd for box inputs)\n"
    "  value | value1..valueN   transform value, one column per coordinate of the value space\n"
    "  error_estimate    riesz only: |Q_n - Q_{n/2}| between node counts\n";

constexpr const char* kNormColumns =
    "CSV columns:\n"
    "  operator          ht | hr | hdis, or ht-fft for Phi,Psi ascent\n"
    "  p                 exponent (nan for non-power gauges)\n"
    "  size              truncation size N\n"
    "  estimate          certified lower bound for the norm (the ratio itself for ascent)\n"
    "  pichorides_bound  cot(pi/2p*), or its p-th power for ascent; nan when it does not apply\n"
    "  iterations        iterations used\n"
    "  residual          last relative change of the ratio\n"
    "  converged         true | false\n"
    "Exit 2 if an estimate exceeds its bound by more than 1e-6 or the sequence decreases.\n";

constexpr const char* kSimColumns =
    "CSV columns:\n"
    "  experiment        inequality | orthogonality | decoupling | tau | harmonic\n"
    "  quantity          name of the estimated quantity\n"
    "  estimate          Monte Carlo estimate\n"
    "  sigma             bootstrap (or sample) standard error, nan if none\n"
    "  ci_lo, ci_hi      estimate -/+ 3 sigma\n"
    "  target            reference value of the gate, nan for informational rows\n"
    "  relation          ci3 (|est - target| <= 3 sigma), le (est <= target + 3 sigma),\n"
    "                    ge (est >= target - 3 sigma), rel2 (|est/target - 1| <= 0.02),\n"
    "                    band30 (|est/target - 1| <= 0.3), info\n"
    "  pass              true | false\n"
    "Exit 2 if any row fails.\n";

constexpr const char* kConstantsColumns =
    "CSV columns (with --out): p, p_star, pichorides, beta_hilbert, wds_bound, and C, extrapolation with --C.\n";

constexpr const char* kReportColumns =
    "CSV columns:\n"
    "  id, subcommand    manifest id and the subcommand that produced it\n"
    "  experiment        short description of the run\n"
    "  target            reference constant (nan if none)\n"
    "  estimate          final estimate of the run\n"
    "  gap               target - estimate\n"
    "  pass              true | false, from the run's own gates\n"
    "Exit 2 if any run failed its gates.\n";

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t\r");
    if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
  }
  return out;
}

/// Points from a file (one point per line), "a:b:n" (n points from a to b
/// inclusive) or "x,y;x,y". In one dimension every number is a point.
std::vector<Vector> parse_points(const std::string& spec, int d) {
  std::vector<std::vector<double>> groups;
  if (fs::is_regular_file(spec)) {
    std::ifstream in(spec);
    std::string line;
    while (std::getline(in, line)) {
      line = line.substr(0, line.find('#'));
      for (char& c : line)
        if (c == ',') c = ' ';
      std::istringstream ls(line);
      std::vector<double> g;
      for (std::string tok; ls >> tok;) g.push_back(parse_real(tok));
      if (!g.empty()) groups.push_back(g);
    }
  } else if (spec.find(':') != std::string::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw Error(ErrorKind::Parse, "grid spec must be a:b:n, got '" + spec + "'");
    const double a = parse_real(parts[0]), b = parse_real(parts[1]);
    const long n = std::stol(parts[2]);
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "grid spec needs n >= 1");
    std::vector<double> g;
    for (long i = 0; i < n; ++i) g.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(i) / (n - 1));
    groups.push_back(g);
  } else {
    for (const auto& grp : split(spec, ';')) {
      std::vector<double> g;
      for (const auto& tok : split(grp, ',')) g.push_back(parse_real(tok));
      groups.push_back(g);
    }
  }
  std::vector<Vector> pts;
  for (const auto& g : groups) {
    if (d == 1) {
      for (double v : g) pts.push_back(Vector::Constant(1, v));
    } else {
      if (static_cast<int>(g.size()) != d)
        throw Error(ErrorKind::DimensionMismatch,
                    "point with " + std::to_string(g.size()) + " coordinates, expected " + std::to_string(d));
      pts.push_back(Eigen::Map<const Vector>(g.data(), d));
    }
  }
  if (pts.empty()) throw Error(ErrorKind::InvalidArgument, "no evaluation points in '" + spec + "'");
  return pts;
}

Vector parse_vector(const std::string& text) {
  const auto toks = split(text, ',');
  Vector v(static_cast<Eigen::Index>(toks.size()));
  for (std::size_t i = 0; i < toks.size(); ++i) v[static_cast<Eigen::Index>(i)] = parse_real(toks[i]);
  return v;
}

/// Every option of the subcommand as given or defaulted, for the manifest.
nlohmann::json echo_options(const CLI::App& app) {
  nlohmann::json cfg = nlohmann::json::object();
  for (const CLI::Option* opt : app.get_options()) {
    const auto& names = opt->get_lnames();
    if (names.empty() || names[0] == "help" || names[0] == "config") continue;
    if (opt->count() > 0) {
      const auto& r = opt->results();
      cfg[names[0]] = r.size() == 1 ? nlohmann::json(r[0]) : nlohmann::json(r);
    } else {
      cfg[names[0]] = opt->get_default_str();
    }
  }
  return cfg;
}

/// Writes the table to `path` plus its manifest, or to `out` when path is empty.
void emit(const CsvTable& table, const std::string& path, const CLI::App& app, const std::vector<std::string>& inputs,
          std::ostream& out, const std::vector<std::string>& extra_outputs = {}) {
  if (path.empty()) {
    write_csv(out, table);
    return;
  }
  write_csv_file(path, table);
  std::vector<std::string> outputs{path};
  outputs.insert(outputs.end(), extra_outputs.begin(), extra_outputs.end());
  write_manifest(manifest_path_for(path), make_manifest(app.get_name(), echo_options(app), inputs, outputs));
}

std::string yes(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- transform

struct TransformArgs {
  std::string op = "ht";
  std::string input;
  std::string points;
  std::string out;
  double eps = 1.0;
  std::string theta;
  int j = 1;
  int nodes = 256;
  double tol = 1e-8;
};

int do_transform(const TransformArgs& a, const CLI::App& app, std::ostream& out) {
  const OperatorKind::Tag tag = parse_operator_tag(a.op);
  const StepInput input = read_step_function_file(a.input);
  const auto* pw = std::get_if<PiecewiseFunction>(&input);
  const auto* box = std::get_if<BoxFunction>(&input);
  const int d = box ? box->ambient_dim() : 1;
  const int vdim = box ? box->space().dim() : pw->dim();

  OperatorKind kind = OperatorKind::of(tag);
  kind.eps = a.eps;
  kind.j = a.j;
  kind.d = d;
  kind.nodes = a.nodes;
  if (tag == OperatorKind::Tag::DirectionalHilbert) {
    if (a.theta.empty()) throw Error(ErrorKind::InvalidArgument, "dir needs --theta");
    kind.theta = parse_vector(a.theta);
    if (kind.theta.size() != d) throw Error(ErrorKind::DimensionMismatch, "theta must have " + std::to_string(d) + " entries");
  }
  kind.validate();

  const bool needs_1d = tag == OperatorKind::Tag::PeriodicHilbert || tag == OperatorKind::Tag::RealHilbert ||
                        tag == OperatorKind::Tag::DiscreteHilbert || tag == OperatorKind::Tag::SemidiscreteHilbert;
  if (needs_1d && !pw) throw Error(ErrorKind::InvalidArgument, a.op + " takes a one-dimensional step function");
  if (tag == OperatorKind::Tag::RieszRotations && !box)
    throw Error(ErrorKind::InvalidArgument, "riesz takes a box step function (Box2, Box3)");
  if (tag == OperatorKind::Tag::RieszMultiplier)
    throw Error(ErrorKind::Unsupported, "riesz-fft acts on grids, not step-function inputs");

  CsvTable t;
  if (d == 1)
    t.header.push_back(tag == OperatorKind::Tag::DiscreteHilbert ? "k" : "t");
  else
    for (int i = 1; i <= d; ++i) t.header.push_back("x" + std::to_string(i));
  if (vdim == 1)
    t.header.push_back("value");
  else
    for (int i = 1; i <= vdim; ++i) t.header.push_back("value" + std::to_string(i));
  if (tag == OperatorKind::Tag::RieszRotations) t.header.push_back("error_estimate");

  for (const Vector& x : parse_points(a.points, d)) {
    Vector v;
    double err_est = 0.0;
    switch (tag) {
      case OperatorKind::Tag::PeriodicHilbert: v = periodic_hilbert_step(*pw, x[0]); break;
      case OperatorKind::Tag::RealHilbert: v = real_hilbert_step(*pw, x[0]); break;
      case OperatorKind::Tag::DiscreteHilbert: {
        if (std::round(x[0]) != x[0]) throw Error(ErrorKind::InvalidArgument, "hdis points must be integers");
        v = discrete_hilbert(*pw, std::lround(x[0]));
        break;
      }
      case OperatorKind::Tag::SemidiscreteHilbert: v = semidiscrete_hilbert(*pw, a.eps, x[0]); break;
      case OperatorKind::Tag::HilbertOperatorTj:
        v = box ? hilbert_operator_T(*box, x, a.j, a.tol) : hilbert_operator_T(*pw, x[0]);
        break;
      case OperatorKind::Tag::DirectionalHilbert:
        if (box) {
          v = directional_hilbert(*box, kind.theta, x);
        } else {
          if (pw->domain() != Domain::RealLine) throw Error(ErrorKind::Domain, "dir takes RealLine or box inputs");
          v = kind.theta[0] * real_hilbert_step(*pw, x[0]);
        }
        break;
      case OperatorKind::Tag::RieszRotations: {
        const RieszValue r = riesz_rotations(*box, a.j, x, a.nodes);
        v = Vector::Constant(1, r.value);
        err_est = r.error_estimate;
        break;
      }
      case OperatorKind::Tag::RieszMultiplier: break;
    }
    std::vector<std::string> row;
    for (Eigen::Index i = 0; i < x.size(); ++i) row.push_back(format_number(x[i]));
    for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(format_number(v[i]));
    if (tag == OperatorKind::Tag::RieszRotations) row.push_back(format_number(err_est));
    t.rows.push_back(std::move(row));
  }
  std::vector<std::string> inputs{a.input};
  if (fs::is_regular_file(a.points)) inputs.push_back(a.points);
  emit(t, a.out, app, inputs, out);
  return kOk;
}

// ----------------------------------------------------------- norm-estimate

struct NormArgs {
  std::string op = "hdis";
  double p = 2.0;
  std::string gauges;
  std::string constraint = "none";
  std::vector<long> sizes{1024};
  std::optional<double> tol;
  std::uint64_t seed = 20240601;
  std::optional<int> max_iter;
  std::string seed_kind = "random";
  int dim = 1;
  double q = 2.0;
  std::string out;
};

int do_norm(NormArgs a, const CLI::App& app, std::ostream& out) {
  std::sort(a.sizes.begin(), a.sizes.end());
  for (long n : a.sizes)
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "sizes must be >= 2");
  CsvTable t;
  t.header = {"operator", "p", "size", "estimate", "pichorides_bound", "iterations", "residual", "converged"};
  bool gate = true;

  if (!a.gauges.empty()) {
    const GaugePair gp = parse_gauge_pair(a.gauges);
    if (parse_operator_tag(a.op) != OperatorKind::Tag::PeriodicHilbert && app.count("--op") > 0)
      throw Error(ErrorKind::InvalidArgument, "Phi,Psi ascent runs on the torus grid (--op ht)");
    Constraint c;
    if (a.constraint == "none")
      c = Constraint::None;
    else if (a.constraint == "zero-mean")
      c = Constraint::ZeroMean;
    else
      throw Error(ErrorKind::InvalidArgument, "constraint must be none or zero-mean");
    AscentOptions opts;
    opts.space = NormedSpace(a.dim, a.q);
    opts.seed = a.seed;
    if (a.tol) opts.tol = *a.tol;
    if (a.max_iter) opts.max_iter = *a.max_iter;
    const bool same_power = gp.phi.kind == Gauge::Kind::Power && gp.psi == gp.phi;
    const double p = same_power ? gp.phi.p : std::nan("");
    const double bound = same_power && opts.space.is_hilbert() ? std::pow(pichorides_constant(p), p) : std::nan("");
    for (long n : a.sizes) {
      const auto op = make_grid_operator(n);
      const NormEstimate e = phi_psi_ratio_ascent(*op, gp, c, opts);
      if (!std::isnan(bound) && e.lower_bound > bound + 1e-6) gate = false;
      t.rows.push_back({op->name(), format_number(p), std::to_string(n), format_number(e.lower_bound),
                        format_number(bound), std::to_string(e.iterations), format_number(e.residual),
                        yes(e.converged)});
    }
  } else {
    if (a.constraint != "none") throw Error(ErrorKind::InvalidArgument, "--constraint applies to --gauges runs");
    const OperatorKind::Tag tag = parse_operator_tag(a.op);
    PowerIterationOptions opts;
    opts.seed = a.seed;
    if (a.tol) opts.tol = *a.tol;
    if (a.max_iter) opts.max_iter = *a.max_iter;
    if (a.seed_kind == "odd")
      opts.seed_kind = SeedKind::OddSymmetric;
    else if (a.seed_kind != "random")
      throw Error(ErrorKind::InvalidArgument, "seed-kind must be random or odd");
    const double bound = pichorides_constant(a.p);
    double prev = 0.0;
    std::optional<Eigen::VectorXd> witness;
    for (long n : a.sizes) {
      const auto op = make_truncated_operator(tag, n);
      opts.start.reset();
      if (witness && (tag != OperatorKind::Tag::PeriodicHilbert || n % witness->size() == 0))
        opts.start = embed_witness(tag, *witness, n);
      const NormEstimate e = p_norm_power_iteration(*op, a.p, opts);
      if (e.lower_bound > bound + 1e-6 || e.lower_bound < prev * (1.0 - 1e-12)) gate = false;
      prev = e.lower_bound;
      t.rows.push_back({to_string(tag), format_number(a.p), std::to_string(n), format_number(e.lower_bound),
                        format_number(bound), std::to_string(e.iterations), format_number(e.residual),
                        yes(e.converged)});
      witness = e.witness.scalar_values();
    }
  }
  emit(t, a.out, app, {}, out);
  return gate ? kOk : kGateFailed;
}

// ---------------------------------------------------------------- simulate

struct SimArgs {
  std::string experiment;
  std::string input;
  double p = 2.0;
  std::string gauges;
  SimConfig config;
  std::string domain = "disc";
  std::string g;
  std::optional<double> bound;
  std::string integrand = "deterministic";
  std::vector<double> coefficients{1.0, 2.0, 0.5};
  double horizon = 1.0;
  std::string out;
};

struct SimRows {
  CsvTable table;
  bool pass = true;

  void add(const std::string& exp, const std::string& quantity, double est, double sigma, double target,
           const std::string& relation) {
    const double s = std::isnan(sigma) ? 0.0 : sigma;
    bool ok = true;
    if (relation == "ci3") ok = std::abs(est - target) <= 3.0 * s;
    else if (relation == "le") ok = est <= target + 3.0 * s;
    else if (relation == "ge") ok = est >= target - 3.0 * s;
    else if (relation == "rel2") ok = std::abs(est / target - 1.0) <= 0.02;
    else if (relation == "band30") ok = std::abs(est / target - 1.0) <= 0.3;
    pass = pass && ok;
    table.rows.push_back({exp, quantity, format_number(est), format_number(sigma), format_number(est - 3.0 * s),
                          format_number(est + 3.0 * s), format_number(target), relation, yes(ok)});
  }
  void add(const std::string& exp, const std::string& quantity, const mc::Estimate& e, double target,
           const std::string& relation) {
    add(exp, quantity, e.value, e.sigma, target, relation);
  }
};

PiecewiseFunction sign_step() { return PiecewiseFunction::scalar(Domain::Torus, {{-kPi, 0.0, -1.0}, {0.0, kPi, 1.0}}); }

PiecewiseFunction torus_input(const std::string& path) {
  if (path.empty()) return sign_step();
  const StepInput in = read_step_function_file(path);
  const auto* f = std::get_if<PiecewiseFunction>(&in);
  if (!f || f->domain() != Domain::Torus) throw Error(ErrorKind::Domain, path + ": boundary data must be a Torus step function");
  return *f;
}

int do_simulate(const SimArgs& a, const CLI::App& app, std::ostream& out) {
  a.config.validate();
  const GaugePair gauges = a.gauges.empty() ? GaugePair{Gauge::power(a.p), Gauge::power(a.p)} : parse_gauge_pair(a.gauges);
  const bool same_power = gauges.phi.kind == Gauge::Kind::Power && gauges.psi == gauges.phi;
  const double nan = std::nan("");
  SimRows r;
  r.table.header = {"experiment", "quantity", "estimate", "sigma", "ci_lo", "ci_hi", "target", "relation", "pass"};
  std::vector<std::string> inputs;
  if (!a.input.empty()) inputs.push_back(a.input);
  const std::string& x = a.experiment;

  if (x == "inequality") {
    const PiecewiseFunction f = torus_input(a.input);
    const InequalityResult res = mc_inequality(f, gauges, a.config);
    r.add(x, "ratio", res.ratio, res.boundary_ratio, "ci3");
    if (same_power && f.space().is_hilbert())
      r.add(x, "ratio_vs_ceiling", res.ratio, std::pow(pichorides_constant(gauges.phi.p), gauges.phi.p), "le");
    r.add(x, "lhs", res.lhs, nan, "info");
    r.add(x, "rhs", res.rhs, nan, "info");
  } else if (x == "orthogonality") {
    const PiecewiseFunction f = torus_input(a.input);
    std::vector<Vector> functionals;
    for (int i = 0; i < f.dim(); ++i) functionals.push_back(Vector::Unit(f.dim(), i));
    SimConfig fine = a.config;
    fine.dt = a.config.dt / 4.0;
    const PairDiagnostics coarse = pair_diagnostics(f, a.config, functionals);
    const PairDiagnostics quarter = pair_diagnostics(f, fine, functionals);
    r.add(x, "rms_covariation", coarse.rms_covariation, nan, nan, "info");
    r.add(x, "rms_covariation_quarter_dt", quarter.rms_covariation, nan, nan, "info");
    r.add(x, "covariation_ratio", quarter.rms_covariation / coarse.rms_covariation, nan, 0.5, "band30");
    r.add(x, "fraction_below_minus_10dt", coarse.fraction_below, nan, 0.01, "le");
    r.add(x, "min_increment", coarse.min_increment, nan, nan, "info");
  } else if (x == "decoupling") {
    PredictableIntegrand phi;
    if (a.integrand == "deterministic")
      phi = PredictableIntegrand::deterministic(a.coefficients, a.horizon);
    else if (a.integrand == "sign")
      phi = PredictableIntegrand::sign_of_path(a.horizon);
    else
      throw Error(ErrorKind::InvalidArgument, "integrand must be deterministic or sign");
    const DecouplingResult res = estimate_decoupling_gamma(phi, a.p, a.config);
    if (res.degenerate) {
      r.add(x, "degenerate", 1.0, nan, nan, "info");
    } else if (a.integrand == "deterministic" && a.p == 2.0) {
      r.add(x, "beta_plus", res.beta_plus, 1.0, "rel2");
      r.add(x, "beta_minus", res.beta_minus, 1.0, "rel2");
    } else {
      const double c = pichorides_constant(a.p);
      r.add(x, "beta_plus", res.beta_plus, c, "le");
      r.add(x, "beta_minus", res.beta_minus, c, "le");
    }
  } else if (x == "tau") {
    const TauResult res = tau_moment_check(a.config);
    r.add(x, "e_tau", res.e_tau, 1.0, "ci3");
    r.add(x, "e_tau_sq", res.e_tau_sq, 5.0 / 3.0, "ci3");
    r.add(x, "e_sqrt_tau", res.e_sqrt_tau, nan, "info");
    r.add(x, "e_abs_gamma", res.e_abs_gamma, std::sqrt(2.0 / kPi), "ci3");
    r.add(x, "product", res.product, 0.618, "ge");
  } else if (x == "harmonic") {
    HarmonicDomain dom;
    if (a.domain == "disc")
      dom = HarmonicDomain::Disc;
    else if (a.domain == "square")
      dom = HarmonicDomain::Square;
    else
      throw Error(ErrorKind::InvalidArgument, "domain must be disc or square");
    const PiecewiseFunction f = torus_input(a.input);
    std::optional<PiecewiseFunction> g;
    if (!a.g.empty()) {
      g = torus_input(a.g);
      inputs.push_back(a.g);
    }
    double bound = 0.0;
    if (a.bound)
      bound = *a.bound;
    else if (same_power)
      bound = std::pow(pichorides_constant(gauges.phi.p), gauges.phi.p);
    else
      throw Error(ErrorKind::InvalidArgument, "non-power gauges need --bound");
    const HarmonicReport res = harmonic_inequality_check(dom, f, g, gauges, a.config, bound);
    r.add(x, "ratio", res.ratio, bound, "le");
    r.add(x, "exit_law_p_value", res.exit_fit.p_value, nan, 1e-3, "ge");
    r.add(x, "verified", res.verified ? 1.0 : 0.0, nan, nan, "info");
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown experiment '" + x + "'");
  }
  emit(r.table, a.out, app, inputs, out);
  return r.pass ? kOk : kGateFailed;
}

// --------------------------------------------------------------- constants

int do_constants(double p, std::optional<double> C, const std::string& path, const CLI::App& app, std::ostream& out) {
  const ReferenceConstants rc = reference_constants(p);
  std::ostringstream s;
  s << std::setprecision(7);
  s << "p*=" << rc.p_star << "\npichorides=" << rc.pichorides << "\nbeta_hilbert=" << rc.beta_hilbert
    << "\nwds_bound=" << rc.wds_bound_hilbert << "\n";
  CsvTable t;
  t.header = {"p", "p_star", "pichorides", "beta_hilbert", "wds_bound"};
  t.rows.push_back({format_number(p), format_number(rc.p_star), format_number(rc.pichorides),
                    format_number(rc.beta_hilbert), format_number(rc.wds_bound_hilbert)});
  if (C) {
    const double e = extrapolation_constant(p, *C);
    s << "extrapolation=" << e << "\n";
    t.header.insert(t.header.end(), {"C", "extrapolation"});
    t.rows[0].insert(t.rows[0].end(), {format_number(*C), format_number(e)});
  }
  out << s.str();
  if (!path.empty()) emit(t, path, app, {}, out);
  return kOk;
}

// ------------------------------------------------------------------ report

int do_report(const std::vector<std::string>& manifests, const std::string& path, const std::string& svg,
              const CLI::App& app, std::ostream& out) {
  const ReportResult res = build_report(manifests);
  std::vector<std::string> extra;
  if (!svg.empty()) {
    std::ofstream f(svg, std::ios::binary);
    if (!f) throw Error(ErrorKind::Io, "cannot write " + svg);
    f << res.svg;
    extra.push_back(svg);
  }
  emit(res.summary, path, app, manifests, out, extra);
  return res.all_pass ? kOk : kGateFailed;
}

void add_config(CLI::App* sub, std::string& path) {
  sub->add_option("--config", path, "key=value file; keys are long option names, flags on the command line win")
      ->check(CLI::ExistingFile);
}

/// Appends "--key=value" for each config entry whose option is not already on
/// the command line. Lines are key=value; '#' starts a comment.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) return args;  // CLI11 reports the missing file
  std::vector<std::string> out = args;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw Error(ErrorKind::Parse, path + ": expected key=value, got '" + line + "'");
      continue;
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r\"");
      const auto e = s.find_last_not_of(" \t\r\"");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    if (key.empty() || key == "config") continue;
    const std::string flag = "--" + key;
    bool given = false;
    for (const auto& a : args) given = given || a == flag || a.rfind(flag + "=", 0) == 0;
    if (!given) out.push_back(flag + "=" + value);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hilbertlab: Hilbert transform norms, transforms and martingale simulations", "hilbertlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hilbertlab 1.0");
  std::string config_path;

  TransformArgs ta;
  CLI::App* transform = app.add_subcommand("transform", "Evaluate a transform of a step function at points");
  add_config(transform, config_path);
  transform->add_option("--op", ta.op, "ht | hr | hdis | hsemi | tj | dir | riesz")->capture_default_str();
  transform->add_option("--input", ta.input, "step function file")->required()->check(CLI::ExistingFile);
  transform->add_option("--points", ta.points, "file (one point per line), a:b:n, or x1,x2;y1,y2")->required();
  transform->add_option("--out", ta.out, "CSV output (stdout if absent)");
  transform->add_option("--eps", ta.eps, "lattice spacing for hsemi")->capture_default_str();
  transform->add_option("--theta", ta.theta, "unit direction for dir, comma separated");
  transform->add_option("--j", ta.j, "coordinate index for tj and riesz (1-based)")->capture_default_str();
  transform->add_option("--nodes", ta.nodes, "sphere nodes for riesz")->capture_default_str();
  transform->add_option("--tol", ta.tol, "absolute quadrature tolerance for tj on boxes")->capture_default_str();
  transform->footer(kTransformColumns);

  NormArgs na;
  CLI::App* norm = app.add_subcommand("norm-estimate", "Lower bounds for operator norms on truncations");
  add_config(norm, config_path);
  norm->add_option("--op", na.op, "ht | hr | hdis")->capture_default_str();
  norm->add_option("--p", na.p, "exponent p > 1")->capture_default_str();
  norm->add_option("--gauges", na.gauges, "Phi/Psi pair, e.g. power:3/power:3 (runs ascent on the ht grid)");
  norm->add_option("--constraint", na.constraint, "none | zero-mean (ascent only)")->capture_default_str();
  norm->add_option("--size", na.sizes, "truncation sizes, ascending runs are warm started")
      ->delimiter(',')
      ->capture_default_str();
  norm->add_option("--tol", na.tol, "relative stopping tolerance");
  norm->add_option("--seed", na.seed, "start-vector seed")->envname("HILBERTLAB_SEED")->capture_default_str();
  norm->add_option("--max-iter", na.max_iter, "iteration cap");
  norm->add_option("--seed-kind", na.seed_kind, "random | odd")->capture_default_str();
  norm->add_option("--dim", na.dim, "value-space dimension for ascent")->capture_default_str();
  norm->add_option("--q", na.q, "value-space l_q exponent for ascent")->capture_default_str();
  norm->add_option("--out", na.out, "CSV output (stdout if absent)");
  norm->footer(kNormColumns);

  SimArgs sa;
  CLI::App* sim = app.add_subcommand("simulate", "Monte Carlo experiments with planar and linear Brownian motion");
  add_config(sim, config_path);
  sim->add_option("--experiment", sa.experiment, "inequality | orthogonality | decoupling | tau | harmonic")->required();
  sim->add_option("--input", sa.input, "Torus step function f (default: sign step)")->check(CLI::ExistingFile);
  sim->add_option("--p", sa.p, "exponent for power gauges and decoupling")->capture_default_str();
  sim->add_option("--gauges", sa.gauges, "Phi/Psi pair, overrides --p for gauges");
  sim->add_option("--dt", sa.config.dt, "time step")->capture_default_str();
  sim->add_option("--paths", sa.config.n_paths, "number of paths")->capture_default_str();
  sim->add_option("--seed", sa.config.seed, "RNG key")->envname("HILBERTLAB_SEED")->capture_default_str();
  sim->add_option("--boundary-tol", sa.config.boundary_tol, "stopping slack, >= 4 sqrt(dt)")->capture_default_str();
  sim->add_option("--domain", sa.domain, "disc | square (harmonic)")->capture_default_str();
  sim->add_option("--g", sa.g, "Torus step function g (harmonic; default conjugate of f)")->check(CLI::ExistingFile);
  sim->add_option("--bound", sa.bound, "ratio bound for harmonic (default cot(pi/2p*)^p)");
  sim->add_option("--integrand", sa.integrand, "deterministic | sign (decoupling)")->capture_default_str();
  sim->add_option("--coefficients", sa.coefficients, "deterministic integrand values")
      ->delimiter(',')
      ->capture_default_str();
  sim->add_option("--horizon", sa.horizon, "integration horizon (decoupling)")->capture_default_str();
  sim->add_option("--out", sa.out, "CSV output (stdout if absent)");
  sim->footer(kSimColumns);

  double cp = 0.0;
  std::optional<double> cC;
  std::string cout_path;
  CLI::App* constants = app.add_subcommand("constants", "Reference constants for an exponent p");
  add_config(constants, config_path);
  constants->add_option("--p", cp, "exponent p > 1")->required();
  constants->add_option("--C", cC, "also print the extrapolation constant for this C");
  constants->add_option("--out", cout_path, "also write a CSV row");
  constants->footer(kConstantsColumns);

  std::vector<std::string> manifests;
  std::string rout, rsvg;
  CLI::App* report = app.add_subcommand("report", "Merge run manifests into a summary table and plot");
  add_config(report, config_path);
  report->add_option("--manifests,manifests", manifests, "manifest files")->required();
  report->add_option("--out", rout, "summary CSV (stdout if absent)");
  report->add_option("--svg", rsvg, "convergence plot");
  report->footer(kReportColumns);

  if (args.empty()) {
    err << app.help();
    return kInputError;
  }
  try {
    const std::vector<std::string> expanded = expand_config(args);
    std::vector<std::string> rev(expanded.rbegin(), expanded.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    out << sub->help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "hilbertlab 1.0\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kInputError;
  } catch (const Error& e) {
    err << "hilbertlab: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*transform) return do_transform(ta, *transform, out);
    if (*norm) return do_norm(na, *norm, out);
    if (*sim) return do_simulate(sa, *sim, out);
    if (*constants) return do_constants(cp, cC, cout_path, *constants, out);
    if (*report) return do_report(manifests, rout, rsvg, *report, out);
  } catch (const Error& e) {
    err << "hilbertlab: " << e.what() << "\n";
    return e.kind() == ErrorKind::NonFinite ? kGateFailed : kInputError;
  } catch (const std::exception& e) {
    err << "hilbertlab: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace hilbertlab::cli

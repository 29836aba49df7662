#include "hilbertlab/norms/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "hilbertlab/norms/constants.hpp"

namespace hilbertlab {

namespace {

double sgn(double v) { return static_cast<double>((v > 0.0) - (v < 0.0)); }

// |y|^{r-1} sgn(y), unnormalized.
Eigen::VectorXd duality_map(const Eigen::VectorXd& y, double r) {
  Eigen::VectorXd out(y.size());
  for (Eigen::Index i = 0; i < y.size(); ++i) out[i] = y[i] == 0.0 ? 0.0 : sgn(y[i]) * std::pow(std::abs(y[i]), r - 1.0);
  return out;
}

GridFunction witness_grid(Domain domain, const Eigen::VectorXd& x) {
  const long n = x.size();
  Matrix s = x;
  switch (domain) {
    case Domain::Torus: return GridFunction::torus(s);
    case Domain::RealLine: return GridFunction::real_line(s, 0.5 * static_cast<double>(n));
    case Domain::Integers: break;
  }
  GridFunction g;
  g.domain = Domain::Integers;
  g.samples = s;
  g.spacing = 1.0;
  g.origin = -static_cast<double>(n / 2);
  g.space = NormedSpace::scalar();
  return g;
}

}  // namespace

Eigen::VectorXd seed_vector(long n, std::uint64_t seed, SeedKind kind) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "seed length must be >= 1");
  std::mt19937_64 gen(seed);
  Eigen::VectorXd x(n);
  // Top 53 bits to [-1, 1): portable, unlike the std distributions.
  for (long i = 0; i < n; ++i) x[i] = 2.0 * static_cast<double>(gen() >> 11) * 0x1.0p-53 - 1.0;
  if (kind == SeedKind::OddSymmetric) {
    const Eigen::VectorXd r = x.reverse();
    x = 0.5 * (x - r);
    if (x.cwiseAbs().maxCoeff() == 0.0) x[0] = 1.0;
  }
  return x;
}

double sequence_norm(const Eigen::VectorXd& x, double p) { return NormedSpace::lq_norm(x, p); }

NormEstimate p_norm_power_iteration(const LinearOperator& op, double p, const PowerIterationOptions& options) {
  if (!(p > 1.0) || std::isinf(p)) throw Error(ErrorKind::InvalidArgument, "power iteration needs 1 < p < inf");
  const long n = op.size();
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "truncation size must be >= 2");
  Eigen::VectorXd x = options.start ? *options.start : seed_vector(n, options.seed, options.seed_kind);
  if (x.size() != n) throw Error(ErrorKind::DimensionMismatch, "start vector has the wrong length");
  const double x_norm = sequence_norm(x, p);
  if (!(x_norm > 0.0) || !std::isfinite(x_norm)) throw Error(ErrorKind::InvalidArgument, "start vector must be nonzero");
  x /= x_norm;

  const double q = p / (p - 1.0);
  Eigen::VectorXd y = op.apply(x);
  double ratio = sequence_norm(y, p);

  NormEstimate est;
  est.truncation = n;
  for (int it = 1; it <= options.max_iter; ++it) {
    const Eigen::VectorXd z = op.apply_adjoint(duality_map(y, p));
    Eigen::VectorXd next = duality_map(z, q);
    const double nn = sequence_norm(next, p);
    if (nn == 0.0) break;  // A^T J(Ax) = 0: x is in the kernel direction, nothing to improve
    next /= nn;
    const Eigen::VectorXd y_next = op.apply(next);
    const double r_next = sequence_norm(y_next, p);
    if (r_next < ratio * (1.0 - 1e-12) - 1e-300) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "power iteration ratio decreased at iteration " << it << " on " << op.name() << " (N=" << n
          << ", p=" << p << "): " << ratio << " -> " << r_next;
      throw Error(ErrorKind::NonFinite, msg.str());
    }
    est.residual = r_next > 0.0 ? (r_next - ratio) / r_next : 0.0;
    est.iterations = it;
    x = std::move(next);
    y = y_next;
    ratio = std::max(ratio, r_next);
    if (est.residual <= options.tol) {
      est.converged = true;
      break;
    }
  }
  // Report the ratio the witness actually attains.
  est.lower_bound = sequence_norm(op.apply(x), p) / sequence_norm(x, p);
  est.witness = witness_grid(op.domain(), x);
  return est;
}

namespace {

struct RatioParts {
  double num = 0.0;
  double den = 0.0;
};

Matrix apply_columns(const LinearOperator& op, const Matrix& f, bool adjoint) {
  Matrix out(f.rows(), f.cols());
  for (Eigen::Index c = 0; c < f.cols(); ++c) {
    const Eigen::VectorXd col = f.col(c);
    out.col(c) = adjoint ? op.apply_adjoint(col) : op.apply(col);
  }
  return out;
}

RatioParts ratio_parts(const GaugePair& gauges, const Matrix& f, const Matrix& g, const NormedSpace& space) {
  RatioParts r;
  for (Eigen::Index i = 0; i < f.rows(); ++i) {
    r.den += evaluate_gauge(gauges.phi, f.row(i).transpose(), space);
    r.num += evaluate_gauge(gauges.psi, g.row(i).transpose(), space);
  }
  if (!std::isfinite(r.num) || !std::isfinite(r.den)) throw Error(ErrorKind::NonFinite, "gauge integral is not finite");
  return r;
}

void project_mean_zero(Matrix& f) {
  for (Eigen::Index c = 0; c < f.cols(); ++c) f.col(c).array() -= f.col(c).mean();
}

}  // namespace

double phi_psi_ratio(const LinearOperator& op, const GaugePair& gauges, const Matrix& f, const NormedSpace& space) {
  const RatioParts r = ratio_parts(gauges, f, apply_columns(op, f, false), space);
  if (r.den == 0.0) throw Error(ErrorKind::Domain, "Phi integral vanishes");
  return r.num / r.den;
}

NormEstimate phi_psi_ratio_ascent(const LinearOperator& op, const GaugePair& gauges, Constraint constraint,
                                  const AscentOptions& options) {
  const long n = op.size();
  if (op.domain() != Domain::Torus) throw Error(ErrorKind::Domain, "ratio ascent runs on torus grids");
  if (!is_power_of_two(n)) throw Error(ErrorKind::InvalidArgument, "grid size must be a power of two");
  const NormedSpace& space = options.space;
  const int dim = space.dim();

  Matrix f(n, dim);
  if (options.start) {
    f = *options.start;
    if (f.rows() != n || f.cols() != dim) throw Error(ErrorKind::DimensionMismatch, "start grid has the wrong shape");
  } else {
    for (int c = 0; c < dim; ++c) f.col(c) = seed_vector(n, options.seed + static_cast<std::uint64_t>(c), SeedKind::Random);
  }
  const bool zero_mean = constraint == Constraint::ZeroMean;
  const bool homogeneous =
      gauges.phi.homogeneity() > 0.0 && gauges.phi.homogeneity() == gauges.psi.homogeneity();
  auto normalize = [&](Matrix& m) {
    if (zero_mean) project_mean_zero(m);
    if (homogeneous) {
      const double s = m.norm();
      if (s > 0.0) m /= s;
    }
  };
  normalize(f);

  Matrix g = apply_columns(op, f, false);
  RatioParts parts = ratio_parts(gauges, f, g, space);
  if (parts.den == 0.0) throw Error(ErrorKind::Domain, "Phi integral vanishes at the seed");
  double ratio = parts.num / parts.den;

  NormEstimate est;
  est.truncation = n;
  std::vector<double> history{ratio};
  double step = -1.0;
  constexpr int kWindow = 25;
  for (int it = 1; it <= options.max_iter; ++it) {
    // grad R = (A^T Psi'(A f) - R Phi'(f)) / den
    Matrix dpsi(n, dim), dphi(n, dim);
    for (long i = 0; i < n; ++i) {
      dpsi.row(i) = gauge_gradient(gauges.psi, g.row(i).transpose(), space).transpose();
      dphi.row(i) = gauge_gradient(gauges.phi, f.row(i).transpose(), space).transpose();
    }
    Matrix grad = (apply_columns(op, dpsi, true) - ratio * dphi) / parts.den;
    if (zero_mean) project_mean_zero(grad);
    const double gnorm = grad.norm();
    if (!std::isfinite(gnorm)) throw Error(ErrorKind::NonFinite, "gradient is not finite");
    est.iterations = it;
    if (gnorm == 0.0) {
      est.converged = true;
      break;
    }
    if (step < 0.0) step = 0.1 * std::max(1.0, f.norm()) / gnorm;

    bool accepted = false;
    Matrix trial, trial_g;
    RatioParts trial_parts;
    for (int k = 0; k < 60; ++k) {
      trial = f + step * grad;
      normalize(trial);
      trial_g = apply_columns(op, trial, false);
      trial_parts = ratio_parts(gauges, trial, trial_g, space);
      if (trial_parts.den > 0.0 && trial_parts.num / trial_parts.den >= ratio) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      est.residual = 0.0;
      est.converged = true;
      break;
    }
    const double next = trial_parts.num / trial_parts.den;
    est.residual = next > 0.0 ? (next - ratio) / next : 0.0;
    f = std::move(trial);
    g = std::move(trial_g);
    parts = trial_parts;
    ratio = next;
    step *= 2.0;
    history.push_back(ratio);
    if (history.size() > kWindow) {
      const double old = history[history.size() - 1 - kWindow];
      if (ratio > 0.0 && (ratio - old) / ratio <= options.tol) {
        est.converged = true;
        break;
      }
    }
  }
  est.lower_bound = phi_psi_ratio(op, gauges, f, space);
  est.witness = GridFunction::torus(f, space);
  return est;
}

Eigen::VectorXd embed_witness(OperatorKind::Tag tag, const Eigen::VectorXd& x, long n) {
  const long m = x.size();
  if (n < m) throw Error(ErrorKind::InvalidArgument, "cannot embed into a smaller truncation");
  if (tag == OperatorKind::Tag::PeriodicHilbert) {
    if (n % m != 0) throw Error(ErrorKind::InvalidArgument, "torus cell refinement needs n to be a multiple of m");
    const long r = n / m;
    Eigen::VectorXd out(n);
    for (long i = 0; i < m; ++i) out.segment(i * r, r).setConstant(x[i]);
    return out;
  }
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  out.segment((n - m) / 2, m) = x;
  return out;
}

ConsistencyReport cross_domain_consistency(double p, const std::vector<long>& sizes, double band,
                                           const PowerIterationOptions& options) {
  if (sizes.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one size");
  ConsistencyReport rep;
  rep.p = p;
  rep.target = pichorides_constant(p);
  rep.band = band;
  std::vector<long> sorted = sizes;
  std::sort(sorted.begin(), sorted.end());
  const OperatorKind::Tag tags[] = {OperatorKind::Tag::PeriodicHilbert, OperatorKind::Tag::DiscreteHilbert,
                                    OperatorKind::Tag::RealHilbert};
  for (OperatorKind::Tag tag : tags) {
    OperatorSequence seq;
    seq.name = to_string(tag);
    std::optional<Eigen::VectorXd> previous;
    for (long n : sorted) {
      PowerIterationOptions opt = options;
      opt.start.reset();
      if (previous) {
        const bool refinable = tag != OperatorKind::Tag::PeriodicHilbert || n % previous->size() == 0;
        if (refinable) opt.start = embed_witness(tag, *previous, n);
      }
      const auto op = make_truncated_operator(tag, n);
      const NormEstimate est = p_norm_power_iteration(*op, p, opt);
      if (!seq.estimates.empty() && est.lower_bound < seq.estimates.back() * (1.0 - 1e-12)) seq.nondecreasing = false;
      seq.sizes.push_back(n);
      seq.estimates.push_back(est.lower_bound);
      seq.converged.push_back(est.converged);
      if (est.lower_bound > rep.target + 1e-6) rep.below_ceiling = false;
      previous = est.witness.scalar_values();
    }
    rep.sequences.push_back(std::move(seq));
  }
  double lo = kInf, hi = 0.0;
  for (const auto& s : rep.sequences) {
    const double v = s.estimates.back();
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    rep.max_gap_to_target = std::max(rep.max_gap_to_target, std::abs(v - rep.target) / rep.target);
  }
  rep.spread = hi > 0.0 ? (hi - lo) / hi : 0.0;
  rep.within_band = rep.spread <= band;
  return rep;
}

}  // namespace hilbertlab

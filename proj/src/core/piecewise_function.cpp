#include "hilbertlab/core/piecewise_function.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace hilbertlab {

const char* to_string(Domain d) {
  switch (d) {
    case Domain::Torus: return "Torus";
    case Domain::RealLine: return "RealLine";
    case Domain::Integers: return "Integers";
  }
  return "?";
}

PiecewiseFunction::PiecewiseFunction(Domain domain, NormedSpace space, std::vector<Piece> pieces)
    : domain_(domain), space_(space), pieces_(std::move(pieces)) {
  validate();
}

void PiecewiseFunction::validate() {
  for (const Piece& p : pieces_) {
    space_.check(p.value);
    if (!p.value.allFinite()) throw Error(ErrorKind::NonFinite, "piece value is not finite");
    if (!std::isfinite(p.lo) || !std::isfinite(p.hi))
      throw Error(ErrorKind::InvalidArgument, "piece endpoints must be finite");
    if (domain_ == Domain::Integers) {
      if (p.lo != p.hi || p.lo != std::round(p.lo))
        throw Error(ErrorKind::InvalidArgument, "integer pieces must be single integer points");
    } else if (!(p.lo < p.hi)) {
      throw Error(ErrorKind::InvalidArgument, "interval pieces need lo < hi");
    }
    if (domain_ == Domain::Torus && (p.lo < -kPi - 1e-12 || p.hi > kPi + 1e-12))
      throw Error(ErrorKind::Domain, "torus pieces must lie in [-pi, pi)");
  }
  std::sort(pieces_.begin(), pieces_.end(), [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    const bool overlap = domain_ == Domain::Integers ? pieces_[i].lo == pieces_[i - 1].lo
                                                     : pieces_[i].lo < pieces_[i - 1].hi;
    if (overlap) throw Error(ErrorKind::InvalidArgument, "pieces must be disjoint");
  }
  if (domain_ == Domain::Torus) {
    for (Piece& p : pieces_) {
      p.lo = std::max(p.lo, -kPi);
      p.hi = std::min(p.hi, kPi);
    }
  }
}

PiecewiseFunction PiecewiseFunction::scalar(Domain domain,
                                            std::initializer_list<std::tuple<double, double, double>> pieces) {
  std::vector<Piece> out;
  for (const auto& [lo, hi, v] : pieces) out.push_back({lo, hi, Vector::Constant(1, v)});
  return PiecewiseFunction(domain, NormedSpace::scalar(), std::move(out));
}

PiecewiseFunction PiecewiseFunction::indicator(Domain domain, double lo, double hi, double value) {
  return scalar(domain, {{lo, hi, value}});
}

PiecewiseFunction PiecewiseFunction::delta(long k, double value) {
  const double x = static_cast<double>(k);
  return scalar(Domain::Integers, {{x, x, value}});
}

std::vector<double> PiecewiseFunction::breakpoints() const {
  std::vector<double> out;
  if (domain_ == Domain::Integers) return out;
  for (const Piece& p : pieces_) {
    out.push_back(p.lo);
    out.push_back(p.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool PiecewiseFunction::is_breakpoint(double t, double tol) const {
  for (double b : breakpoints()) {
    double d = std::abs(t - b);
    if (domain_ == Domain::Torus) d = std::min(d, kTwoPi - d);
    if (d <= tol) return true;
  }
  return false;
}

Vector PiecewiseFunction::operator()(double t) const {
  if (domain_ == Domain::Torus) t = std::remainder(t, kTwoPi);  // representative in [-pi, pi]
  if (domain_ == Domain::Torus && t >= kPi) t -= kTwoPi;
  for (const Piece& p : pieces_) {
    if (domain_ == Domain::Integers ? t == p.lo : (t >= p.lo && t < p.hi)) return p.value;
  }
  return zero();
}

double PiecewiseFunction::support_measure() const {
  double m = 0.0;
  for (const Piece& p : pieces_) m += p.measure(domain_);
  return m;
}

Vector PiecewiseFunction::integral() const {
  Vector s = zero();
  for (const Piece& p : pieces_) s += p.measure(domain_) * p.value;
  return s;
}

double PiecewiseFunction::sup_norm() const {
  double m = 0.0;
  for (const Piece& p : pieces_) m = std::max(m, space_.norm(p.value));
  return m;
}

std::pair<double, double> PiecewiseFunction::support_hull() const {
  if (pieces_.empty()) return {0.0, 0.0};
  double lo = pieces_.front().lo, hi = pieces_.front().hi;
  for (const Piece& p : pieces_) {
    lo = std::min(lo, p.lo);
    hi = std::max(hi, p.hi);
  }
  return {lo, hi};
}

PiecewiseFunction PiecewiseFunction::operator+(const PiecewiseFunction& other) const {
  if (domain_ != other.domain_) throw Error(ErrorKind::InvalidArgument, "adding functions on different domains");
  if (space_.dim() != other.space_.dim()) throw Error(ErrorKind::DimensionMismatch, "adding functions in different spaces");
  std::vector<Piece> out;
  if (domain_ == Domain::Integers) {
    std::map<double, Vector> acc;
    for (const auto* f : {this, &other})
      for (const Piece& p : f->pieces_) {
        auto [it, inserted] = acc.try_emplace(p.lo, p.value);
        if (!inserted) it->second += p.value;
      }
    for (auto& [k, v] : acc)
      if (!v.isZero(0.0)) out.push_back({k, k, v});
    return PiecewiseFunction(domain_, space_, std::move(out));
  }
  std::vector<double> cuts = breakpoints();
  for (double b : other.breakpoints()) cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    Vector v = (*this)(mid) + other(mid);
    if (!v.isZero(0.0)) out.push_back({cuts[i], cuts[i + 1], v});
  }
  return PiecewiseFunction(domain_, space_, std::move(out));
}

PiecewiseFunction PiecewiseFunction::operator*(double a) const {
  std::vector<Piece> out = pieces_;
  for (Piece& p : out) p.value *= a;
  return PiecewiseFunction(domain_, space_, std::move(out));
}

PiecewiseFunction PiecewiseFunction::translated(double shift) const {
  if (domain_ == Domain::Torus) throw Error(ErrorKind::Unsupported, "translation is defined on RealLine and Integers");
  if (domain_ == Domain::Integers && shift != std::round(shift))
    throw Error(ErrorKind::InvalidArgument, "integer translation must be integral");
  std::vector<Piece> out = pieces_;
  for (Piece& p : out) {
    p.lo += shift;
    p.hi += shift;
  }
  return PiecewiseFunction(domain_, space_, std::move(out));
}

PiecewiseFunction PiecewiseFunction::dilated(double scale) const {
  if (domain_ != Domain::RealLine) throw Error(ErrorKind::Unsupported, "dilation is defined on RealLine");
  if (!(scale > 0.0)) throw Error(ErrorKind::InvalidArgument, "dilation factor must be positive");
  std::vector<Piece> out = pieces_;
  for (Piece& p : out) {
    p.lo /= scale;
    p.hi /= scale;
  }
  return PiecewiseFunction(domain_, space_, std::move(out));
}

GaugeIntegral integrate_gauge(const PiecewiseFunction& f, const Gauge& g) {
  GaugeIntegral out;
  for (const Piece& p : f.pieces()) out.value += g.radial(f.space().norm(p.value)) * p.measure(f.domain());
  const double g0 = g.at_zero();
  if (g0 != 0.0) {
    if (f.domain() == Domain::Torus) {
      out.value += g0 * (kTwoPi - f.support_measure());
    } else {
      out.value = kInf;
      out.infinite = true;
    }
  }
  return out;
}

PiecewiseFunction project_zero_mean(const PiecewiseFunction& f) {
  if (f.domain() != Domain::Torus) throw Error(ErrorKind::Domain, "zero-mean projection is defined on the Torus");
  const Vector mean = f.integral() / kTwoPi;
  if (mean.isZero(0.0)) return f;
  std::vector<Piece> out;
  double cursor = -kPi;
  for (const Piece& p : f.pieces()) {
    if (p.lo > cursor) out.push_back({cursor, p.lo, -mean});
    out.push_back({p.lo, p.hi, p.value - mean});
    cursor = p.hi;
  }
  if (cursor < kPi) out.push_back({cursor, kPi, -mean});
  return PiecewiseFunction(Domain::Torus, f.space(), std::move(out));
}

}  // namespace hilbertlab

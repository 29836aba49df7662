#include "hilbertlab/core/text_format.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "hilbertlab/core/gauge.hpp"

namespace hilbertlab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_plain(const std::string& token) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "not a number: '" + token + "'");
  }
  if (used != token.size()) throw Error(ErrorKind::Parse, "trailing characters in '" + token + "'");
  return v;
}

std::string format_real(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

double parse_real(const std::string& raw) {
  std::string token = trim(raw);
  if (token.empty()) throw Error(ErrorKind::Parse, "empty number");
  const auto pi_at = token.find("pi");
  if (pi_at == std::string::npos) return parse_plain(token);
  // [sign][k*]pi[/m]
  double sign = 1.0;
  std::string head = token.substr(0, pi_at);
  std::string tail = token.substr(pi_at + 2);
  if (!head.empty() && (head[0] == '-' || head[0] == '+')) {
    sign = head[0] == '-' ? -1.0 : 1.0;
    head.erase(0, 1);
  }
  double factor = 1.0;
  if (!head.empty()) {
    if (head.back() != '*') throw Error(ErrorKind::Parse, "expected k*pi in '" + token + "'");
    head.pop_back();
    factor = parse_plain(head);
  }
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail[0] != '/') throw Error(ErrorKind::Parse, "expected pi/m in '" + token + "'");
    divisor = parse_plain(tail.substr(1));
  }
  return sign * factor * kPi / divisor;
}

StepInput read_step_function(std::istream& in) {
  std::string line;
  std::string header;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (header.empty()) {
      header = line;
      continue;
    }
    std::istringstream ls(line);
    std::vector<double> row;
    std::string tok;
    while (ls >> tok) row.push_back(parse_real(tok));
    rows.push_back(std::move(row));
  }
  if (header.empty()) throw Error(ErrorKind::Parse, "missing header line '<domain>; <q>; <n>;'");

  std::vector<std::string> fields;
  {
    std::istringstream hs(header);
    std::string f;
    while (std::getline(hs, f, ';'))
      if (!trim(f).empty()) fields.push_back(trim(f));
  }
  if (fields.size() != 3) throw Error(ErrorKind::Parse, "header must be '<domain>; <q>; <n>;'");
  const std::string& dom = fields[0];
  const double q = (fields[1] == "inf" || fields[1] == "infinity") ? kInf : parse_plain(fields[1]);
  const int n = static_cast<int>(parse_plain(fields[2]));
  const NormedSpace space(n, q);

  if (dom.rfind("Box", 0) == 0) {
    const int d = static_cast<int>(parse_plain(dom.substr(3)));
    std::vector<Box> boxes;
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != 2 * d + n)
        throw Error(ErrorKind::Parse, "box rows need 2d endpoints and n values");
      Box b{Vector(d), Vector(d), Vector(n)};
      for (int i = 0; i < d; ++i) {
        b.lo[i] = r[2 * i];
        b.hi[i] = r[2 * i + 1];
      }
      for (int i = 0; i < n; ++i) b.value[i] = r[2 * d + i];
      boxes.push_back(std::move(b));
    }
    return BoxFunction(d, space, std::move(boxes));
  }

  Domain domain;
  if (dom == "Torus") domain = Domain::Torus;
  else if (dom == "RealLine") domain = Domain::RealLine;
  else if (dom == "Integers") domain = Domain::Integers;
  else throw Error(ErrorKind::Parse, "unknown domain '" + dom + "'");

  const std::size_t lead = domain == Domain::Integers ? 1 : 2;
  std::vector<Piece> pieces;
  for (const auto& r : rows) {
    if (r.size() != lead + static_cast<std::size_t>(n))
      throw Error(ErrorKind::Parse, "piece rows need " + std::to_string(lead) + " position(s) and n values");
    Piece p{r[0], lead == 2 ? r[1] : r[0], Vector(n)};
    for (int i = 0; i < n; ++i) p.value[i] = r[lead + i];
    pieces.push_back(std::move(p));
  }
  return PiecewiseFunction(domain, space, std::move(pieces));
}

StepInput read_step_function_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  return read_step_function(in);
}

PiecewiseFunction read_piecewise(std::istream& in) {
  StepInput s = read_step_function(in);
  if (auto* f = std::get_if<PiecewiseFunction>(&s)) return *f;
  throw Error(ErrorKind::Parse, "expected a Torus/RealLine/Integers step function");
}

void write_step_function(std::ostream& out, const PiecewiseFunction& f) {
  const double q = f.space().q();
  out << to_string(f.domain()) << "; " << (std::isinf(q) ? std::string("inf") : format_real(q)) << "; " << f.dim()
      << ";\n";
  for (const Piece& p : f.pieces()) {
    out << format_real(p.lo);
    if (f.domain() != Domain::Integers) out << ' ' << format_real(p.hi);
    for (Eigen::Index i = 0; i < p.value.size(); ++i) out << ' ' << format_real(p.value[i]);
    out << '\n';
  }
}

void write_step_function(std::ostream& out, const BoxFunction& f) {
  const double q = f.space().q();
  out << "Box" << f.ambient_dim() << "; " << (std::isinf(q) ? std::string("inf") : format_real(q)) << "; "
      << f.space().dim() << ";\n";
  for (const Box& b : f.boxes()) {
    for (int i = 0; i < f.ambient_dim(); ++i) out << format_real(b.lo[i]) << ' ' << format_real(b.hi[i]) << ' ';
    for (Eigen::Index i = 0; i < b.value.size(); ++i) out << (i ? " " : "") << format_real(b.value[i]);
    out << '\n';
  }
}

std::string to_string(const Gauge& g) {
  switch (g.kind) {
    case Gauge::Kind::Power: return "power:" + format_real(g.p);
    case Gauge::Kind::LLogL: return "llogl";
    case Gauge::Kind::Norm: return "norm";
  }
  return "?";
}

Gauge parse_gauge(const std::string& raw) {
  const std::string text = trim(raw);
  if (text == "llogl") return Gauge::llogl();
  if (text == "norm") return Gauge::norm();
  if (text.rfind("power:", 0) == 0) return Gauge::power(parse_plain(text.substr(6)));
  throw Error(ErrorKind::Parse, "unknown gauge '" + text + "' (power:<p>, llogl, norm)");
}

GaugePair parse_gauge_pair(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    const Gauge g = parse_gauge(text);
    return {g, g};
  }
  return {parse_gauge(text.substr(0, slash)), parse_gauge(text.substr(slash + 1))};
}

}  // namespace hilbertlab

#include "hilbertlab/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <sstream>

#include "hilbertlab/cli/manifest.hpp"
#include "hilbertlab/core/error.hpp"

namespace hilbertlab::cli {

namespace fs = std::filesystem;

namespace {

struct Row {
  std::string experiment;
  double target = std::nan("");
  double estimate = std::nan("");
  bool pass = true;
};

Row summarize(const Manifest& m, const CsvTable& t, std::map<std::string, Series>& series) {
  Row r;
  if (t.rows.empty()) throw Error(ErrorKind::Parse, "output of manifest " + m.id + " has no rows");
  const std::size_t last = t.rows.size() - 1;
  if (m.subcommand == "norm-estimate") {
    r.experiment = "norm-estimate:" + t.at(last, "operator") + ":p=" + t.at(last, "p");
    r.target = t.number(last, "pichorides_bound");
    r.estimate = t.number(last, "estimate");
    Series& s = series[t.at(last, "operator") + " p=" + t.at(last, "p")];
    s.label = t.at(last, "operator") + " p=" + t.at(last, "p");
    s.ceiling = r.target;
    double prev = -INFINITY;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const double e = t.number(i, "estimate"), b = t.number(i, "pichorides_bound");
      if (!std::isnan(b) && e > b + 1e-6) r.pass = false;
      if (e < prev * (1.0 - 1e-12)) r.pass = false;
      prev = e;
      s.x.push_back(t.number(i, "size"));
      s.y.push_back(e);
    }
  } else if (m.subcommand == "simulate") {
    r.experiment = "simulate:" + t.at(0, "experiment") + ":" + t.at(0, "quantity");
    r.target = t.number(0, "target");
    r.estimate = t.number(0, "estimate");
    for (std::size_t i = 0; i < t.rows.size(); ++i) r.pass = r.pass && t.at(i, "pass") == "true";
  } else if (m.subcommand == "constants") {
    r.experiment = "constants:p=" + t.at(0, "p");
    r.target = t.number(0, "pichorides");
    r.estimate = r.target;
  } else if (m.subcommand == "report") {
    r.experiment = "report";
    r.estimate = static_cast<double>(t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) r.pass = r.pass && t.at(i, "pass") == "true";
  } else if (m.subcommand == "transform") {
    r.experiment = "transform:" + m.config.value("op", std::string("?"));
    r.estimate = static_cast<double>(t.rows.size());
  } else {
    throw Error(ErrorKind::Parse, "manifest " + m.id + " has unknown subcommand '" + m.subcommand + "'");
  }
  return r;
}

}  // namespace

ReportResult build_report(const std::vector<std::string>& manifest_paths) {
  if (manifest_paths.empty()) throw Error(ErrorKind::InvalidArgument, "report needs at least one manifest");
  ReportResult out;
  out.summary.header = {"id", "subcommand", "experiment", "target", "estimate", "gap", "pass"};
  std::map<std::string, std::string> seen;  // id -> hash
  std::map<std::string, Series> series;
  for (const std::string& path : manifest_paths) {
    const Manifest m = read_manifest(path);
    if (auto it = seen.find(m.id); it != seen.end()) {
      if (it->second != m.hash) throw Error(ErrorKind::InvalidArgument, "conflicting manifests for id " + m.id);
      continue;  // the same run listed twice
    }
    seen[m.id] = m.hash;
    const fs::path dir = fs::path(path).parent_path();
    std::vector<CsvTable> tables;
    for (const std::string& o : m.outputs) {
      const fs::path file = dir / o;
      if (!fs::exists(file)) throw Error(ErrorKind::Io, "manifest " + m.id + " references missing output " + o);
      if (file.extension() == ".csv") tables.push_back(read_csv_file(file.string()));
    }
    if (tables.empty()) throw Error(ErrorKind::Io, "manifest " + m.id + " lists no CSV output");
    const Row r = summarize(m, tables.front(), series);
    out.all_pass = out.all_pass && r.pass;
    out.summary.rows.push_back({m.id, m.subcommand, r.experiment, format_number(r.target), format_number(r.estimate),
                                format_number(r.target - r.estimate), r.pass ? "true" : "false"});
  }
  std::vector<Series> list;
  for (auto& [k, s] : series) {
    // Runs may arrive in any order; plot by size.
    std::vector<std::size_t> idx(s.x.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return s.x[a] < s.x[b]; });
    Series sorted{s.label, s.ceiling, {}, {}};
    for (std::size_t i : idx) {
      sorted.x.push_back(s.x[i]);
      sorted.y.push_back(s.y[i]);
    }
    list.push_back(std::move(sorted));
  }
  out.svg = convergence_svg(list);
  return out;
}

std::string convergence_svg(const std::vector<Series>& series) {
  constexpr double W = 640, H = 400, L = 70, R = 20, T = 30, B = 50;
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& s : series) {
    for (double x : s.x) {
      xmin = std::min(xmin, std::log2(x));
      xmax = std::max(xmax, std::log2(x));
    }
    for (double y : s.y) ymin = std::min(ymin, y);
    ymax = std::max(ymax, std::isnan(s.ceiling) ? *std::max_element(s.y.begin(), s.y.end()) : s.ceiling);
  }
  if (series.empty() || !std::isfinite(xmin)) {
    svg << "<text x=\"" << W / 2 << "\" y=\"" << H / 2 << "\" text-anchor=\"middle\">no convergence data</text>\n</svg>\n";
    return svg.str();
  }
  if (xmax == xmin) xmin -= 1, xmax += 1;
  const double pad = 0.05 * std::max(ymax - ymin, 1e-3);
  ymin -= pad;
  ymax += pad;
  auto px = [&](double x) { return L + (std::log2(x) - xmin) / (xmax - xmin) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };
  svg << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << (W + L) / 2 << "\" y=\"" << H - 10 << "\" text-anchor=\"middle\">truncation size N (log2)</text>\n";
  svg << "<text x=\"15\" y=\"" << H / 2 << "\" transform=\"rotate(-90 15 " << H / 2
      << ")\" text-anchor=\"middle\">norm estimate</text>\n";
  for (int k = static_cast<int>(std::ceil(xmin)); k <= static_cast<int>(std::floor(xmax)); ++k) {
    const double x = px(std::exp2(k));
    svg << "<text x=\"" << x << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\" font-size=\"11\">" << (1L << k)
        << "</text>\n";
  }
  for (int k = 0; k <= 4; ++k) {
    const double y = ymin + (ymax - ymin) * k / 4.0;
    svg << "<text x=\"" << L - 6 << "\" y=\"" << py(y) + 4 << "\" text-anchor=\"end\" font-size=\"11\">"
        << format_number(std::round(y * 1e4) / 1e4) << "</text>\n";
  }
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* c = colors[i % 6];
    if (!std::isnan(s.ceiling)) {
      svg << "<line x1=\"" << L << "\" y1=\"" << py(s.ceiling) << "\" x2=\"" << W - R << "\" y2=\"" << py(s.ceiling)
          << "\" stroke=\"" << c << "\" stroke-dasharray=\"6 4\"/>\n";
      svg << "<text x=\"" << W - R - 4 << "\" y=\"" << py(s.ceiling) - 5 << "\" text-anchor=\"end\" font-size=\"11\" fill=\""
          << c << "\">cot(pi/2p*) = " << format_number(std::round(s.ceiling * 1e6) / 1e6) << "</text>\n";
    }
    svg << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < s.x.size(); ++k) svg << (k ? " " : "") << px(s.x[k]) << "," << py(s.y[k]);
    svg << "\"/>\n";
    for (std::size_t k = 0; k < s.x.size(); ++k)
      svg << "<circle cx=\"" << px(s.x[k]) << "\" cy=\"" << py(s.y[k]) << "\" r=\"3\" fill=\"" << c << "\"/>\n";
    svg << "<text x=\"" << L + 10 << "\" y=\"" << T + 14 * (i + 1) << "\" font-size=\"12\" fill=\"" << c << "\">"
        << s.label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace hilbertlab::cli

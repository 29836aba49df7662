#include "hilbertlab/cli/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hilbertlab/core/error.hpp"

namespace hilbertlab::cli {

int CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  return -1;
}

const std::string& CsvTable::at(std::size_t row, const std::string& name) const {
  const int c = column(name);
  if (c < 0) throw Error(ErrorKind::Parse, "missing CSV column '" + name + "'");
  if (row >= rows.size() || static_cast<std::size_t>(c) >= rows[row].size())
    throw Error(ErrorKind::Parse, "CSV row " + std::to_string(row) + " is short");
  return rows[row][static_cast<std::size_t>(c)];
}

double CsvTable::number(std::size_t row, const std::string& name) const {
  const std::string& s = at(row, name);
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::Parse, "CSV field '" + s + "' in column " + name + " is not a number");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const CsvTable& table) {
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
    out << '\n';
  };
  line(table.header);
  for (const auto& r : table.rows) line(r);
}

void write_csv_file(const std::string& path, const CsvTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  write_csv(out, table);
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
}

CsvTable read_csv(std::istream& in) {
  CsvTable t;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (line.back() == ',') fields.emplace_back();
    if (first) {
      t.header = std::move(fields);
      first = false;
    } else {
      if (fields.size() != t.header.size()) throw Error(ErrorKind::Parse, "CSV row width differs from the header");
      t.rows.push_back(std::move(fields));
    }
  }
  if (first) throw Error(ErrorKind::Parse, "empty CSV");
  return t;
}

CsvTable read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
  return read_csv(in);
}

}  // namespace hilbertlab::cli

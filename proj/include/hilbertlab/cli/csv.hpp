#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hilbertlab::cli {

/// Plain comma-separated table. Fields never contain commas or quotes.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a column, or -1.
  int column(const std::string& name) const;
  const std::string& at(std::size_t row, const std::string& name) const;
  double number(std::size_t row, const std::string& name) const;
};

/// 17 significant digits; inf and nan spelled "inf", "-inf", "nan".
std::string format_number(double v);

void write_csv(std::ostream& out, const CsvTable& table);
void write_csv_file(const std::string& path, const CsvTable& table);
CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);

}  // namespace hilbertlab::cli

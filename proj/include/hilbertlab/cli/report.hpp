#pragma once

#include <string>
#include <vector>

#include "hilbertlab/cli/csv.hpp"

namespace hilbertlab::cli {

struct ReportResult {
  CsvTable summary;  // id,subcommand,experiment,target,estimate,gap,pass
  std::string svg;   // convergence plot of every norm-estimate run
  bool all_pass = true;
};

/// Merges the CSV outputs of the given manifests, one summary row per
/// manifest. Throws on two manifests sharing an id with different hashes, and
/// on a referenced output that does not exist (naming the manifest id).
ReportResult build_report(const std::vector<std::string>& manifest_paths);

struct Series {
  std::string label;
  double ceiling = 0.0;
  std::vector<double> x;
  std::vector<double> y;
};

/// Line chart: estimate against log2 truncation size, one dashed ceiling line
/// per series.
std::string convergence_svg(const std::vector<Series>& series);

}  // namespace hilbertlab::cli

#pragma once

#include "infmcmc/harness/experiment.hpp"

#include <string>
#include <vector>

namespace infmcmc {

struct ResultPaths {
  std::string summary;
  std::string timing;
  std::string trace;
  std::string adapt;
  std::string acf;
  std::string theta;  // empty unless Gibbs
};

/// Writes summary.json, timing.json, trace.csv, adapt.csv, acf.csv (and
/// theta.csv for Gibbs runs) into dir, creating it if needed.
ResultPaths write_results(const RunResult& result, const std::string& dir);

/// Version stamp of the build, git-describe style.
std::string version_string();

/// Shortest round-trip decimal form used by every writer.
std::string format_double(double x);

/// Reads a numeric CSV with a header row.
struct CsvTable {
  std::vector<std::string> header;
  Matrix values;
};
CsvTable read_numeric_csv(const std::string& path);

}  // namespace infmcmc

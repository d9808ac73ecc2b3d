#pragma once

#include "infmcmc/harness/experiment.hpp"

#include <string>
#include <vector>

namespace infmcmc {

struct CompareRow {
  std::string kernel;
  double min_ess_per_second = 0.0;
  double median_ess_per_second = 0.0;
  double min_ess_per_iteration = 0.0;
  double median_ess_per_iteration = 0.0;
  double beta = 0.0;
  double acceptance = 0.0;
};

struct ComparisonTable {
  std::vector<CompareRow> rows;
  std::vector<RunResult> runs;

  std::string to_csv() const;
  std::string to_text() const;
};

/// Runs every config in turn. All configs must share the model and run
/// length; throws ValidationError otherwise. When write is true each run's
/// files go to its own output_dir.
ComparisonTable compare_kernels(const std::vector<ExperimentConfig>& configs, bool write = true);

}  // namespace infmcmc

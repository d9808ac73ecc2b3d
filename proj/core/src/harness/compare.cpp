#include "infmcmc/harness/compare.hpp"

#include "infmcmc/errors.hpp"
#include "infmcmc/harness/results.hpp"

#include <iomanip>
#include <sstream>

namespace infmcmc {

namespace {

const char* kColumns[] = {"kernel", "min_ess_per_s", "median_ess_per_s", "min_ess_per_iter", "median_ess_per_iter",
                          "beta", "acceptance"};

std::vector<std::string> cells(const CompareRow& r) {
  return {r.kernel,
          format_double(r.min_ess_per_second),
          format_double(r.median_ess_per_second),
          format_double(r.min_ess_per_iteration),
          format_double(r.median_ess_per_iteration),
          format_double(r.beta),
          format_double(r.acceptance)};
}

}  // namespace

std::string ComparisonTable::to_csv() const {
  std::ostringstream out;
  for (std::size_t c = 0; c < std::size(kColumns); ++c) out << (c ? "," : "") << kColumns[c];
  out << "\n";
  for (const auto& row : rows) {
    const auto v = cells(row);
    for (std::size_t c = 0; c < v.size(); ++c) out << (c ? "," : "") << v[c];
    out << "\n";
  }
  return out.str();
}

std::string ComparisonTable::to_text() const {
  std::vector<std::vector<std::string>> grid;
  grid.emplace_back(std::begin(kColumns), std::end(kColumns));
  for (const auto& row : rows) {
    std::vector<std::string> v{row.kernel};
    auto fixed = [](double x, int digits) {
      std::ostringstream s;
      s << std::fixed << std::setprecision(digits) << x;
      return s.str();
    };
    v.push_back(fixed(row.min_ess_per_second, 2));
    v.push_back(fixed(row.median_ess_per_second, 2));
    v.push_back(fixed(row.min_ess_per_iteration, 5));
    v.push_back(fixed(row.median_ess_per_iteration, 5));
    v.push_back(fixed(row.beta, 4));
    v.push_back(fixed(row.acceptance, 3));
    grid.push_back(std::move(v));
  }
  std::vector<std::size_t> width(grid[0].size(), 0);
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::ostringstream out;
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c == 0) {
        out << std::left << std::setw(static_cast<int>(width[c])) << line[c];
      } else {
        out << "  " << std::right << std::setw(static_cast<int>(width[c])) << line[c];
      }
    }
    out << "\n";
  }
  return out.str();
}

ComparisonTable compare_kernels(const std::vector<ExperimentConfig>& configs, bool write) {
  if (configs.empty()) throw ValidationError({"compare: no configurations"});
  const std::string model = model_to_json(configs.front().model);
  std::vector<std::string> issues;
  for (std::size_t i = 1; i < configs.size(); ++i) {
    if (model_to_json(configs[i].model) != model) {
      issues.push_back("configs[" + std::to_string(i) + "].model: differs from configs[0].model");
    }
    if (configs[i].run.iterations != configs.front().run.iterations ||
        configs[i].adapt.burn_in != configs.front().adapt.burn_in) {
      issues.push_back("configs[" + std::to_string(i) + "].run: run length differs from configs[0]");
    }
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));

  ComparisonTable table;
  for (const auto& config : configs) {
    RunResult r = run_experiment(config);
    if (write) write_results(r, config.run.output_dir);
    CompareRow row;
    row.kernel = r.kernel;
    row.min_ess_per_second = r.ess.min_per_second;
    row.median_ess_per_second = r.ess.median_per_second;
    row.min_ess_per_iteration = r.ess.min_per_iteration;
    row.median_ess_per_iteration = r.ess.median_per_iteration;
    row.beta = config.kernel.kind == KernelKind::kMgrad ? r.final_delta : r.final_beta;
    row.acceptance = r.acceptance_rate;
    table.rows.push_back(row);
    table.runs.push_back(std::move(r));
  }
  return table;
}

}  // namespace infmcmc

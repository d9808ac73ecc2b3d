#include "infmcmc/diagnostics/acf.hpp"
#include "infmcmc/diagnostics/ess.hpp"
#include "infmcmc/errors.hpp"
#include "infmcmc/harness/compare.hpp"
#include "infmcmc/harness/config.hpp"
#include "infmcmc/harness/dataset.hpp"
#include "infmcmc/harness/experiment.hpp"
#include "infmcmc/harness/results.hpp"
#include "infmcmc/models/simulate.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace infmcmc;

constexpr int kExitRuntime = 1;
constexpr int kExitValidation = 2;

void print_run(const RunResult& r, const ResultPaths& paths) {
  std::cout << "kernel " << r.kernel << " on " << r.model << ": " << r.iterations << " iterations (" << r.burn_in
            << " burn-in)\n"
            << "  acceptance " << format_double(r.acceptance_rate) << ", final beta " << format_double(r.final_beta)
            << "\n"
            << "  ESS min " << format_double(r.ess.min_ess) << " median " << format_double(r.ess.median_ess)
            << " (min/iter " << format_double(r.ess.min_per_iteration) << ", min/s "
            << format_double(r.ess.min_per_second) << ")\n";
  if (r.mean_field_acf) {
    std::cout << "  mean field ACF(" << r.field_acf_lag << ") " << format_double(*r.mean_field_acf) << "\n";
  }
  if (r.gibbs) {
    std::cout << "  theta acceptance " << format_double(r.gibbs->theta_acceptance) << ", mean (log sigma, log tau) = ("
              << format_double(r.gibbs->theta_mean[0]) << ", " << format_double(r.gibbs->theta_mean[1]) << ")\n";
  }
  std::cout << "  wrote " << paths.summary << "\n";
}

int cmd_run(const std::string& config_path, const std::string& out_override) {
  ExperimentConfig config = load_config(config_path);
  if (!out_override.empty()) config.run.output_dir = out_override;
  BuiltModel preview = build_model(config.model);
  if (preview.dataset) {
    std::cerr << "dataset: " << config.model.kind << ", nodal dim " << preview.model->nodal_dim() << ", coefficient dim "
              << preview.model->dim() << "\n";
  }
  const RunResult r = run_experiment(config);
  print_run(r, write_results(r, config.run.output_dir));
  return 0;
}

int cmd_compare(const std::string& config_path) {
  const CompareConfig compare = load_compare_config(config_path);
  const ComparisonTable table = compare_kernels(expand(compare));
  std::filesystem::create_directories(compare.output_dir);
  std::ofstream(compare.output_dir + "/comparison.csv") << table.to_csv();
  std::ofstream(compare.output_dir + "/comparison.txt") << table.to_text();
  std::cout << table.to_text();
  return 0;
}

int cmd_simulate(const std::string& kind, std::uint64_t seed, const std::string& out, const std::string& config_path,
                 const std::string& truth_path) {
  ModelSpec spec;
  if (!config_path.empty()) spec = load_config(config_path).model;
  spec.kind = kind;
  spec.data_path.reset();
  spec.true_field_seed = seed;
  spec.obs_seed = seed + 1;
  if (kind != "logistic" && kind != "binomial" && kind != "lgcp") {
    throw ValidationError({"--model: must be logistic, binomial or lgcp"});
  }
  const BuiltModel built = build_model(spec);
  write_dataset(*built.dataset, out);
  std::cerr << "wrote " << out << "\n";
  if (!truth_path.empty()) {
    std::ofstream t(truth_path);
    t << "index,u\n";
    for (Index i = 0; i < built.true_field.size(); ++i) t << i << "," << format_double(built.true_field[i]) << "\n";
  }
  return 0;
}

int cmd_diagnose(const std::string& trace_path, const std::vector<int>& lags) {
  const CsvTable table = read_numeric_csv(trace_path);
  std::vector<double> values;
  std::cout << "column,ess,ess_per_row";
  for (int lag : lags) std::cout << ",acf_" << lag;
  std::cout << ",flag\n";
  const long rows = table.values.rows();
  if (rows < 2) throw std::runtime_error("trace has fewer than two rows");
  for (Index c = 0; c < table.values.cols(); ++c) {
    const std::string& name = table.header[c];
    if (name == "iteration" || name == "row") continue;
    const Vector col = table.values.col(c);
    const EssValue e = ess(col);
    values.push_back(e.ess);
    std::cout << name << "," << format_double(e.ess) << "," << format_double(e.ess / rows);
    for (int lag : lags) std::cout << "," << (lag < rows ? format_double(autocorrelation(col, lag).value) : "nan");
    std::cout << "," << (e.zero_variance ? "zero_variance" : e.capped ? "capped" : "") << "\n";
  }
  if (!values.empty()) {
    const EssSummary s = summarize_ess(values, 0.0, rows);
    std::cerr << "rows " << rows << ", min ESS " << format_double(s.min_ess) << ", median ESS "
              << format_double(s.median_ess) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive function-space MCMC samplers and experiment driver"};
  app.set_version_flag("--version", infmcmc::version_string());
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  auto* run = app.add_subcommand("run", "Run one experiment from a JSON config");
  run->add_option("--config", config_path, "Experiment config")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "Override run.output_dir");

  std::string compare_path;
  auto* compare = app.add_subcommand("compare", "Run several kernels on one model and tabulate ESS");
  compare->add_option("--config", compare_path, "Comparison config")->required()->check(CLI::ExistingFile);

  std::string kind;
  std::uint64_t seed = 0;
  std::string sim_out;
  std::string sim_config;
  std::string truth;
  auto* simulate = app.add_subcommand("simulate", "Write a synthetic dataset CSV");
  simulate->add_option("--model", kind, "logistic | binomial | lgcp")->required();
  simulate->add_option("--seed", seed, "Seed for the field and the observations")->required();
  simulate->add_option("--out", sim_out, "Output CSV")->required();
  simulate->add_option("--config", sim_config, "Take model hyperparameters from this experiment config");
  simulate->add_option("--truth", truth, "Also write the generating field");

  std::string trace_path;
  std::vector<int> lags{1, 10, 50};
  auto* diagnose = app.add_subcommand("diagnose", "ESS and ACF of every column of a trace CSV");
  diagnose->add_option("--trace", trace_path, "Trace CSV with a header row")->required()->check(CLI::ExistingFile);
  diagnose->add_option("--lags", lags, "ACF lags");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*run) return cmd_run(config_path, out_dir);
    if (*compare) return cmd_compare(compare_path);
    if (*simulate) return cmd_simulate(kind, seed, sim_out, sim_config, truth);
    if (*diagnose) return cmd_diagnose(trace_path, lags);
  } catch (const infmcmc::ValidationError& e) {
    std::cerr << "invalid configuration:\n";
    for (const auto& issue : e.issues()) std::cerr << "  " << issue << "\n";
    return kExitValidation;
  } catch (const infmcmc::DatasetError& e) {
    std::cerr << "dataset error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitRuntime;
}

#pragma once

#include "infmcmc/models/binomial_lattice.hpp"
#include "infmcmc/models/lgcp.hpp"
#include "infmcmc/models/logistic.hpp"
#include "infmcmc/samplers/kernel_config.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace infmcmc {

/// Model kind plus hyperparameters and a data source. Keys that do not
/// apply to the chosen kind are ignored.
struct ModelSpec {
  std::string kind = "logistic";  // logistic | binomial | lgcp | prior | gaussian
  std::optional<std::string> data_path;
  std::optional<std::uint64_t> true_field_seed;
  std::optional<std::uint64_t> obs_seed;

  // logistic
  int num_points = 200;
  int input_dim = 2;
  LogisticParams logistic;

  // lattice models
  LatticeSpec lattice;
  BinomialParams binomial;
  LgcpParams lgcp;

  // prior / gaussian reference targets: eigenvalues (k + 1)^{-decay}
  int dim = 16;
  double decay = 2.0;
  double noise_sd = 1.0;
};

struct KernelSpec {
  KernelKind kind = KernelKind::kPcn;
  double beta = 0.5;
  double delta = 1.0;
};

struct AdaptSpec {
  bool enabled = true;
  std::optional<double> target_accept;  // defaults per kernel
  long burn_in = 1000;
  bool freeze_after_burn_in = true;
  int n0 = 5;
  bool untruncated = false;
  int adapt_start = 1000;
  double d_min = 1e-8;
  int log_stride = 100;
};

struct RunSpec {
  long iterations = 10000;  // includes burn-in
  int thinning = 10;
  std::optional<std::uint64_t> seed;
  std::string output_dir = "out";
  int monitor = 64;  // leading coefficients traced and used for ESS
  std::vector<int> acf_lags{1, 10, 50};
};

/// Metropolis-within-Gibbs over the LGCP hyperparameters (log sigma, log tau).
struct GibbsSpec {
  bool enabled = false;
  bool theta = true;  // run the hyperparameter block
  bool field = true;  // run the field block
  double proposal_scale = 0.05;
  double target_accept = 0.3;
  int field_acf_lag = 50;
};

struct ExperimentConfig {
  ModelSpec model;
  KernelSpec kernel;
  AdaptSpec adapt;
  RunSpec run;
  GibbsSpec gibbs;
};

/// Parses and validates a JSON experiment config. Throws ValidationError
/// listing every problem found.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);
/// Re-validates a config assembled in code. Throws ValidationError.
void validate_config(const ExperimentConfig& config);

/// Canonical JSON form of a config (stable key order), used as the echo in
/// summary files and to check that compared runs share a model.
std::string config_to_json(const ExperimentConfig& config);
std::string model_to_json(const ModelSpec& model);

/// A kernel comparison: one shared base config and the kernels to run on it.
struct CompareConfig {
  ExperimentConfig base;
  std::vector<KernelSpec> kernels;
  std::string output_dir = "compare";
};

CompareConfig parse_compare_config(const std::string& json_text);
CompareConfig load_compare_config(const std::string& path);

/// One config per kernel, each writing to output_dir/<index>_<kernel>.
std::vector<ExperimentConfig> expand(const CompareConfig& compare);

std::string read_text_file(const std::string& path);

}  // namespace infmcmc

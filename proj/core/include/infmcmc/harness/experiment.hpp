#pragma once

#include "infmcmc/diagnostics/ess.hpp"
#include "infmcmc/harness/config.hpp"
#include "infmcmc/harness/dataset.hpp"
#include "infmcmc/models/target_model.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace infmcmc {

struct BuiltModel {
  std::unique_ptr<TargetModel> model;
  std::optional<Dataset> dataset;
  Vector true_field;  // empty unless simulated
};

/// Loads or simulates the data and constructs the target. Throws
/// ValidationError or DatasetError before any sampling happens.
BuiltModel build_model(const ModelSpec& spec);

struct AdaptRecord {
  long iteration = 0;
  double beta = 0.0;
  double delta = 0.0;
  int n_trunc = 0;
  double accept_ema = 0.0;
  double equivalence = 0.0;
};

struct GibbsStats {
  double theta_acceptance = 0.0;
  long theta_failures = 0;
  double proposal_scale = 0.0;
  Eigen::MatrixX2d theta_trace;  // (log sigma, log tau), post burn-in, thinned
  Eigen::Vector2d theta_mean = Eigen::Vector2d::Zero();
  Eigen::Vector2d theta_mc_se = Eigen::Vector2d::Zero();
};

struct RunResult {
  std::string kernel;
  std::string model;
  long iterations = 0;
  long burn_in = 0;
  long kept = 0;  // post burn-in iterations
  double acceptance_rate = 0.0;
  double final_beta = 0.0;
  double final_delta = 0.0;
  int final_n_trunc = 0;
  double final_equivalence = 0.0;
  long factorisation_failures = 0;
  double wall_seconds = 0.0;
  EssSummary ess;

  Eigen::VectorXi thinned_iterations;
  Matrix thinned_trace;           // thinned monitored coefficients
  Vector thinned_phi;
  std::vector<AdaptRecord> adapt_trace;
  std::vector<int> acf_lags;
  Matrix acf;                     // monitored coordinate x lag
  Vector posterior_mean_z;        // monitored coordinates, post burn-in
  Vector posterior_var_z;
  Vector final_z;
  Vector m_hat;
  Vector d_hat;

  std::optional<double> mean_field_acf;  // lattice fields: mean over cells
  int field_acf_lag = 0;
  std::optional<GibbsStats> gibbs;
  std::string config_json;
};

/// Runs one chain. LGCP configs with gibbs.enabled are routed to
/// run_lgcp_gibbs. Output files are not written; see write_results.
RunResult run_experiment(const ExperimentConfig& config);

/// LGCP field kernel alternated with random-walk MH on (log sigma, log tau).
RunResult run_lgcp_gibbs(const ExperimentConfig& config);

}  // namespace infmcmc

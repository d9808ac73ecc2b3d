// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any
// fails. Pass criterion numbers as arguments to run a subset.

#include "infmcmc/diagnostics/ess.hpp"
#include "infmcmc/harness/config.hpp"
#include "infmcmc/harness/experiment.hpp"
#include "infmcmc/harness/results.hpp"
#include "infmcmc/models/binomial_lattice.hpp"
#include "infmcmc/models/lgcp.hpp"
#include "infmcmc/models/quadrature.hpp"
#include "infmcmc/models/reference_models.hpp"
#include "infmcmc/models/simulate.hpp"
#include "infmcmc/random.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace infmcmc;
using tsupport::Gen;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Verdict()> run;
};

std::string fmt(double x, int precision = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x);
  return buf;
}

/// Posterior moments of the 2-d oracle target in whitened coordinates.
struct ZMoments {
  Vector mean;
  Matrix cov;
};

ZMoments oracle_moments_z(const TargetModel& model, int grid = 200) {
  const PosteriorMoments q = quadrature_posterior_moments(model, grid);
  const SpectralCovariance& prior = *model.prior();
  ZMoments out;
  out.mean = prior.to_coefficients(q.mean);
  Matrix left(prior.dim(), q.covariance.cols());
  for (Index c = 0; c < q.covariance.cols(); ++c) left.col(c) = prior.to_coefficients(q.covariance.col(c));
  out.cov.resize(prior.dim(), prior.dim());
  const Matrix lt = left.transpose();
  for (Index c = 0; c < lt.cols(); ++c) out.cov.col(c) = prior.to_coefficients(lt.col(c));
  return out;
}

Verdict detailed_balance() {
  auto model = tsupport::small_logistic(3);
  CoefficientTarget target(model);
  Gen gen(1001);
  double worst = 0.0;
  std::string worst_kernel;
  for (KernelKind kind : kAllKernels) {
    for (int pair = 0; pair < 100; ++pair) {
      const KernelConfig cfg = tsupport::random_config(kind, 3, gen);
      const ChainState u = make_state(target, kind, gen.normal_vector(3));
      const ChainState v = make_state(target, kind, gen.normal_vector(3));
      const double r = std::abs(tsupport::detailed_balance_residual(target, cfg, u, v));
      if (!(r <= worst)) {
        worst = r;
        worst_kernel = to_string(kind);
      }
    }
  }
  return {worst < 1e-8, "worst residual " + fmt(worst) + " (" + worst_kernel + ") over 10 kernels x 100 pairs"};
}

Verdict conjugate_exactness() {
  Gen gen(1002);
  const Index dim = 5;
  Vector eig(dim);
  eig << 3.0, 1.5, 0.8, 0.3, 0.1;
  auto prior = std::make_shared<SpectralCovariance>(std::make_shared<DenseBasis>(gen.orthonormal(dim)), eig);
  GaussianLikelihoodModel model(prior, Vector::Zero(dim), 1.0);
  CoefficientTarget target(model);
  KernelConfig cfg{KernelKind::kPcnAm0, 1.0};
  cfg.scaling = DiagonalScaling((Vector::Ones(dim) + eig).cwiseInverse());
  ChainRandom rng(1003);
  ChainState s = make_state(target, cfg.kind, gen.normal_vector(dim));
  double worst = 0.0;
  long accepted = 0;
  const long steps = 10000;
  for (long t = 0; t < steps; ++t) {
    StepOutcome out = step(target, cfg, s, rng);
    worst = std::max(worst, std::abs(out.log_ratio));
    accepted += out.accepted ? 1 : 0;
    s = std::move(out.new_state);
  }
  const double rate = static_cast<double>(accepted) / steps;
  return {worst < 1e-10 && accepted == steps, "max |J| " + fmt(worst) + ", acceptance " + fmt(rate, 6)};
}

Verdict prior_preservation() {
  bool pass = true;
  std::ostringstream detail;
  for (KernelKind kind : {KernelKind::kPcn, KernelKind::kPcnl, KernelKind::kPcnAm, KernelKind::kPcnlAm}) {
    ExperimentConfig c;
    c.model.kind = "prior";
    c.model.dim = 16;
    c.kernel.kind = kind;
    c.kernel.beta = 0.5;
    c.adapt.burn_in = 10000;
    c.run.iterations = 110000;
    c.run.thinning = 1;
    c.run.monitor = 16;
    c.run.seed = 1100 + static_cast<std::uint64_t>(kind);
    const RunResult r = run_experiment(c);
    double worst = 0.0;
    for (Index k = 0; k < 16; ++k) {
      const Vector col = r.thinned_trace.col(k);
      const double m = col.mean();
      const double v = (col.array() - m).square().mean();
      worst = std::max(worst, std::abs(m) / tsupport::mc_se_mean(col));
      worst = std::max(worst, std::abs(v - 1.0) / tsupport::mc_se_variance(col));
    }
    pass = pass && worst < 4.0;
    detail << to_string(kind) << " " << fmt(worst) << "se ";
  }
  return {pass, "worst deviation per kernel: " + detail.str()};
}

ExperimentConfig oracle_run(KernelKind kind) {
  ExperimentConfig c;
  c.model = tsupport::oracle_spec();
  c.kernel.kind = kind;
  c.kernel.beta = 0.5;
  c.adapt.burn_in = 20000;
  c.adapt.freeze_after_burn_in = true;
  c.run.iterations = 220000;
  c.run.thinning = 1;
  c.run.monitor = 2;
  c.run.seed = 1200 + static_cast<std::uint64_t>(kind);
  return c;
}

Verdict quadrature_agreement() {
  const BuiltModel built = build_model(tsupport::oracle_spec());
  const ZMoments oracle = oracle_moments_z(*built.model);
  bool pass = true;
  std::ostringstream detail;
  for (KernelKind kind : kAllKernels) {
    const auto start = std::chrono::steady_clock::now();
    const RunResult r = run_experiment(oracle_run(kind));
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double worst = 0.0;
    for (Index k = 0; k < 2; ++k) {
      const Vector col = r.thinned_trace.col(k);
      worst = std::max(worst, std::abs(r.posterior_mean_z[k] - oracle.mean[k]) / tsupport::mc_se_mean(col));
      worst = std::max(worst, std::abs(r.posterior_var_z[k] - oracle.cov(k, k)) / tsupport::mc_se_variance(col));
    }
    const bool ok = worst < 3.0 && seconds < 120.0;
    pass = pass && ok;
    detail << to_string(kind) << " " << fmt(worst) << "se/" << fmt(seconds, 2) << "s" << (ok ? " " : "(!) ");
  }
  return {pass, detail.str()};
}

Verdict finite_differences() {
  Gen gen(1300);
  auto logistic = tsupport::small_logistic(4);
  const LatticeSpec lattice{6, 5, 1.0};
  BinomialParams bp;
  bp.kappa = 0.5;
  bp.obs_fraction = 0.5;
  BinomialLatticeModel binomial(lattice, bp, simulate_binomial(lattice, bp, 1301, 1302).data);
  const LatticeSpec square{6, 6, 1.0};
  LgcpParams lp;
  lp.tau = 4.0;
  LGCPModel lgcp(square, lp, simulate_lgcp(square, lp, 1303, 1304).data);
  double worst_g = 0.0, worst_h = 0.0;
  for (const TargetModel* model : std::initializer_list<const TargetModel*>{&logistic, &binomial, &lgcp}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Vector u = model->prior()->from_coefficients(gen.normal_vector(model->dim()));
      worst_g = std::max(worst_g, tsupport::fd_gradient_error(*model, u));
      worst_h = std::max(worst_h, tsupport::fd_hessian_error(*model, u));
    }
  }
  return {worst_g < 1e-5 && worst_h < 1e-4,
          "worst relative error gradient " + fmt(worst_g) + ", Hessian " + fmt(worst_h) + " over 3 models x 20 points"};
}

Verdict fisher_identity() {
  const BuiltModel built = build_model(tsupport::oracle_spec());
  const TargetModel& model = *built.model;
  const PosteriorMoments q = quadrature_posterior_moments(model, 200);
  const Vector grad_mean = quadrature_expectation(model, 200, [&](const Vector& u) { return model.grad_potential(u); });
  const double residual = (grad_mean + model.prior()->apply_inverse(q.mean)).norm();
  return {residual < 1e-3, "||E[grad Phi] + C^-1 m|| = " + fmt(residual)};
}

Verdict kl_optimum() {
  const BuiltModel built = build_model(tsupport::oracle_spec());
  const ZMoments oracle = oracle_moments_z(*built.model);
  ExperimentConfig c = oracle_run(KernelKind::kPcnAm);
  c.adapt.burn_in = 1000;
  c.adapt.freeze_after_burn_in = false;
  c.adapt.untruncated = true;
  c.run.iterations = 100000;
  c.run.seed = 1400;
  const RunResult r = run_experiment(c);
  double worst = 0.0;
  std::ostringstream detail;
  for (Index k = 0; k < 2; ++k) {
    const Vector col = r.thinned_trace.col(k);
    const double dm = std::abs(r.m_hat[k] - oracle.mean[k]) / tsupport::mc_se_mean(col);
    const double dd = std::abs(r.d_hat[k] - oracle.cov(k, k)) / tsupport::mc_se_variance(col);
    worst = std::max({worst, dm, dd});
    detail << "k=" << k << " m " << fmt(dm) << "se d " << fmt(dd) << "se; ";
  }
  return {worst < 4.0, detail.str() + "updates " + std::to_string(r.iterations)};
}

ModelSpec synthetic_logistic() {
  ModelSpec m;
  m.kind = "logistic";
  m.num_points = 200;
  m.input_dim = 2;
  m.logistic.truncation = 64;
  m.true_field_seed = 1501;
  m.obs_seed = 1502;
  return m;
}

Verdict adaptation_dynamics() {
  auto first_hit = [](bool untruncated) {
    ExperimentConfig c;
    c.model = synthetic_logistic();
    c.kernel.kind = KernelKind::kPcnAm;
    c.kernel.beta = 0.1;
    c.adapt.target_accept = 0.234;
    c.adapt.burn_in = 1000;
    c.adapt.freeze_after_burn_in = false;
    c.adapt.untruncated = untruncated;
    c.adapt.log_stride = 10;
    c.run.iterations = 100000;
    c.run.thinning = 100;
    c.run.monitor = 8;
    c.run.seed = 1503;
    const RunResult r = run_experiment(c);
    for (const AdaptRecord& a : r.adapt_trace)
      if (a.beta >= 0.9) return a.iteration;
    return std::numeric_limits<long>::max();
  };
  const long truncated = first_hit(false);
  const long untruncated = first_hit(true);
  const long never = std::numeric_limits<long>::max();
  auto show = [&](long t) { return t == never ? std::string("never") : std::to_string(t); };
  return {truncated != never && truncated <= untruncated,
          "first iteration with beta >= 0.9: truncated " + show(truncated) + ", untruncated " + show(untruncated)};
}

Verdict efficiency_ordering() {
  std::vector<double> per_iter;
  std::ostringstream detail;
  for (KernelKind kind : {KernelKind::kPcn, KernelKind::kPcnAm, KernelKind::kPcnlAm}) {
    ExperimentConfig c;
    c.model = synthetic_logistic();
    c.kernel.kind = kind;
    c.kernel.beta = 0.2;
    c.adapt.burn_in = 10000;
    c.run.iterations = 110000;
    c.run.thinning = 10;
    c.run.monitor = 64;
    c.run.seed = 1600;
    const RunResult r = run_experiment(c);
    per_iter.push_back(r.ess.min_per_iteration);
    detail << to_string(kind) << " " << fmt(r.ess.min_per_iteration) << " (beta " << fmt(r.final_beta, 2)
           << ", acc " << fmt(r.acceptance_rate, 2) << "); ";
  }
  const bool pass = per_iter[2] > per_iter[1] && per_iter[1] > per_iter[0] && per_iter[2] >= 5.0 * per_iter[0];
  return {pass, "min ESS/iter " + detail.str() + "ratio pcnl_am/pcn " + fmt(per_iter[2] / per_iter[0])};
}

ExperimentConfig lgcp_gibbs(KernelKind kind) {
  ExperimentConfig c;
  c.model.kind = "lgcp";
  c.model.lattice.rows = c.model.lattice.cols = 32;
  c.model.lattice.spacing = 2500.0;
  c.model.true_field_seed = 1701;
  c.model.obs_seed = 1702;
  c.kernel.kind = kind;
  c.kernel.beta = 0.2;
  c.adapt.burn_in = 5000;
  c.run.iterations = 25000;
  c.run.thinning = 10;
  c.run.monitor = 16;
  c.run.seed = 1703;
  c.gibbs.enabled = true;
  c.gibbs.field_acf_lag = 50;
  return c;
}

Verdict lgcp_field_acf() {
  const RunResult am = run_experiment(lgcp_gibbs(KernelKind::kPcnAm));
  const RunResult lam = run_experiment(lgcp_gibbs(KernelKind::kPcnlAm));
  const double a = am.mean_field_acf.value_or(std::nan("")), b = lam.mean_field_acf.value_or(std::nan(""));
  return {b < a, "mean field ACF(50): pcn_am " + fmt(a) + ", pcnl_am " + fmt(b)};
}

Verdict ess_calibration() {
  const double rho = 0.9;
  const long n = 100000;
  const double ratio = ess(tsupport::ar1(n, rho, 1800)).ess / n;
  const double expected = (1.0 - rho) / (1.0 + rho);
  const double rel = std::abs(ratio - expected) / expected;
  return {rel < 0.15, "ESS/n " + fmt(ratio) + " vs " + fmt(expected) + " (relative error " + fmt(rel) + ")"};
}

Verdict reproducibility() {
  namespace fs = std::filesystem;
  std::vector<ExperimentConfig> configs;
  ExperimentConfig logistic;
  logistic.model = synthetic_logistic();
  logistic.kernel.kind = KernelKind::kPcnlAm;
  logistic.run.iterations = 5000;
  logistic.run.seed = 1900;
  configs.push_back(logistic);
  ExperimentConfig gibbs = lgcp_gibbs(KernelKind::kPcnAm);
  gibbs.model.lattice.rows = gibbs.model.lattice.cols = 8;
  gibbs.run.iterations = 6000;
  gibbs.adapt.burn_in = 1000;
  configs.push_back(gibbs);
  ExperimentConfig hm = logistic;
  hm.kernel.kind = KernelKind::kPcnlHm;
  hm.model = tsupport::oracle_spec();
  configs.push_back(hm);

  bool pass = true;
  int compared = 0;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const std::string base = (fs::current_path() / "acceptance_repro" / std::to_string(i)).string();
    fs::remove_all(base);
    const ResultPaths a = write_results(run_experiment(configs[i]), base + "/a");
    const ResultPaths b = write_results(run_experiment(configs[i]), base + "/b");
    std::vector<std::pair<std::string, std::string>> files{{a.trace, b.trace}, {a.summary, b.summary}};
    if (!a.theta.empty()) files.emplace_back(a.theta, b.theta);
    for (const auto& [x, y] : files) {
      pass = pass && read_text_file(x) == read_text_file(y);
      ++compared;
    }
  }
  return {pass, std::to_string(compared) + " file pairs compared across " + std::to_string(configs.size()) +
                    " configs"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "detailed balance", 10, detailed_balance},
      {2, "conjugate exactness", 60, conjugate_exactness},
      {3, "prior preservation", 600, prior_preservation},
      {4, "quadrature moments", 1200, quadrature_agreement},
      {5, "finite differences", 60, finite_differences},
      {6, "Fisher identity", 60, fisher_identity},
      {7, "KL optimum", 120, kl_optimum},
      {8, "adaptation dynamics", 600, adaptation_dynamics},
      {9, "efficiency ordering", 300, efficiency_ordering},
      {10, "LGCP Gibbs field ACF", 300, lgcp_field_acf},
      {11, "ESS calibration", 60, ess_calibration},
      {12, "reproducibility", 300, reproducibility},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      v.pass = false;
      v.detail += "; over the " + fmt(c.budget_seconds) + " s budget";
    }
    failures += v.pass ? 0 : 1;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << v.detail << " ["
              << fmt(seconds, 3) << " s]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}

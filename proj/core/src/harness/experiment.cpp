#include "infmcmc/harness/experiment.hpp"

#include "driver.hpp"
#include "infmcmc/adaptation/adapt_state.hpp"
#include "infmcmc/diagnostics/acf.hpp"
#include "infmcmc/errors.hpp"
#include "infmcmc/harness/config.hpp"
#include "infmcmc/models/binomial_lattice.hpp"
#include "infmcmc/models/lgcp.hpp"
#include "infmcmc/models/logistic.hpp"
#include "infmcmc/models/reference_models.hpp"
#include "infmcmc/models/simulate.hpp"
#include "infmcmc/random.hpp"
#include "infmcmc/samplers/kernels.hpp"

#include <chrono>
#include <cmath>

namespace infmcmc {

namespace {

std::shared_ptr<const SpectralCovariance> decaying_prior(const ModelSpec& spec) {
  Vector eig(spec.dim);
  for (int k = 0; k < spec.dim; ++k) eig[k] = std::pow(k + 1.0, -spec.decay);
  return diagonal_covariance(eig);
}

}  // namespace

BuiltModel build_model(const ModelSpec& spec) {
  BuiltModel out;
  const std::uint64_t field_seed = spec.true_field_seed.value_or(0);
  const std::uint64_t obs_seed = spec.obs_seed.value_or(0);

  if (spec.kind == "logistic") {
    ClassifierData data;
    if (spec.data_path) {
      out.dataset = load_dataset(*spec.data_path, "logistic");
      data = out.dataset->classifier;
    } else {
      auto sim = simulate_classifier(spec.num_points, spec.input_dim, spec.logistic, field_seed, obs_seed);
      data = sim.data;
      out.true_field = sim.true_field;
      out.dataset = from_classifier(data);
    }
    out.model = std::make_unique<LogisticClassifierModel>(std::move(data), spec.logistic);
  } else if (spec.kind == "binomial") {
    BinomialData data;
    if (spec.data_path) {
      out.dataset = load_dataset(*spec.data_path, "binomial");
      data = to_binomial(out.dataset->lattice, spec.lattice);
    } else {
      auto sim = simulate_binomial(spec.lattice, spec.binomial, field_seed, obs_seed);
      data = sim.data;
      out.true_field = sim.true_field;
      out.dataset = from_binomial(data, spec.lattice);
    }
    out.model = std::make_unique<BinomialLatticeModel>(spec.lattice, spec.binomial, std::move(data));
  } else if (spec.kind == "lgcp") {
    Vector counts;
    if (spec.data_path) {
      out.dataset = load_dataset(*spec.data_path, "lgcp");
      counts = to_counts(out.dataset->lattice, spec.lattice);
    } else {
      auto sim = simulate_lgcp(spec.lattice, spec.lgcp, field_seed, obs_seed);
      counts = sim.data;
      out.true_field = sim.true_field;
      out.dataset = from_counts(counts, spec.lattice);
    }
    out.model = std::make_unique<LGCPModel>(spec.lattice, spec.lgcp, std::move(counts));
  } else if (spec.kind == "prior") {
    out.model = std::make_unique<ZeroPotentialModel>(decaying_prior(spec));
  } else if (spec.kind == "gaussian") {
    auto prior = decaying_prior(spec);
    Vector y = Vector::Zero(spec.dim);
    if (spec.true_field_seed && spec.obs_seed) {
      RandomSource field_rng(field_seed);
      RandomSource obs_rng(obs_seed);
      out.true_field = prior->from_coefficients(field_rng.standard_normal(prior->dim()));
      y = out.true_field + spec.noise_sd * obs_rng.standard_normal(spec.dim);
    }
    out.model = std::make_unique<GaussianLikelihoodModel>(prior, y, spec.noise_sd);
  } else {
    throw ValidationError({"model.kind: unknown kind '" + spec.kind + "'"});
  }
  return out;
}

namespace detail {

RunResult drive_chain(const ExperimentConfig& config, const TargetModel& model,
                      std::unique_ptr<CoefficientTarget> target, ChainHooks hooks) {
  const KernelKind kind = config.kernel.kind;
  const Index dim = target->dim();
  const long iterations = config.run.iterations;
  const long burn_in = config.adapt.burn_in;
  const long kept = iterations - burn_in;
  const Index monitor = std::min<Index>(config.run.monitor, dim);
  const int thinning = config.run.thinning;
  const std::uint64_t seed = *config.run.seed;

  AdaptSettings settings;
  settings.target_accept = config.adapt.target_accept.value_or(default_target_accept(kind));
  settings.n0 = config.adapt.n0;
  settings.untruncated = config.adapt.untruncated;
  settings.d_min = config.adapt.d_min;
  settings.adapt_start = config.adapt.adapt_start;
  settings.tune_delta = tunes_delta(kind);
  AdaptState adapt(dim, settings, config.kernel.beta, config.kernel.delta);
  adapt.frozen = !config.adapt.enabled;

  RandomSource init(seed, static_cast<std::uint64_t>(Stream::kInitialState));
  ChainRandom rng(seed);
  ChainState state = make_state(*target, kind, init.standard_normal(dim));

  RunResult result;
  result.kernel = to_string(kind);
  result.model = config.model.kind;
  result.iterations = iterations;
  result.burn_in = burn_in;
  result.kept = kept;
  result.config_json = config_to_json(config);

  Matrix monitored(kept, monitor);
  const long thinned_rows = kept / thinning;
  result.thinned_iterations.resize(thinned_rows);
  result.thinned_trace.resize(thinned_rows, monitor);
  result.thinned_phi.resize(thinned_rows);

  const bool field_acf = model.kind() == "lgcp";
  std::optional<LagAccumulator> lag_acc;
  if (field_acf) lag_acc.emplace(target->prior().nodal_dim(), config.gibbs.field_acf_lag);

  long accepted_kept = 0;
  const auto start = std::chrono::steady_clock::now();
  for (long t = 1; t <= iterations; ++t) {
    if (config.adapt.freeze_after_burn_in && t > burn_in) adapt.frozen = true;
    bool accepted = false;
    if (hooks.field_enabled) {
      KernelConfig kc;
      kc.kind = kind;
      configure_kernel(adapt, kc);
      StepOutcome out = step(*target, kc, state, rng);
      accepted = out.accepted;
      result.factorisation_failures += out.factorisation_failed ? 1 : 0;
      state = std::move(out.new_state);
      update_moments(adapt, state.z);
      apply_truncation(adapt);
      tune_beta(adapt, accepted);
    }
    if (hooks.after_field) hooks.after_field(t, t <= burn_in, target, state);

    if (t % config.adapt.log_stride == 0) {
      result.adapt_trace.push_back(
          {t, adapt.beta, adapt.delta, adapt.n_trunc, adapt.accept_ema, adapt.equivalence()});
    }
    if (t > burn_in) {
      const long k = t - burn_in;
      monitored.row(k - 1) = state.z.head(monitor).transpose();
      accepted_kept += accepted ? 1 : 0;
      if (k % thinning == 0) {
        const long r = k / thinning - 1;
        result.thinned_iterations[r] = static_cast<int>(t);
        result.thinned_trace.row(r) = state.z.head(monitor).transpose();
        result.thinned_phi[r] = state.phi;
      }
      if (lag_acc) lag_acc->push(target->prior().from_coefficients(state.z));
    }
  }
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  result.acceptance_rate = kept > 0 ? static_cast<double>(accepted_kept) / kept : 0.0;
  result.final_beta = adapt.beta;
  result.final_delta = adapt.delta;
  result.final_n_trunc = adapt.n_trunc;
  result.final_equivalence = adapt.equivalence();
  result.final_z = state.z;
  result.m_hat = adapt.m_hat;
  result.d_hat = adapt.d_hat;
  result.acf_lags = config.run.acf_lags;
  if (kept >= 2) {
    result.ess = ess_summary(Trace{monitored, 0}, result.wall_seconds, kept);
    result.acf = acf_table(monitored, config.run.acf_lags);
    result.posterior_mean_z = monitored.colwise().mean().transpose();
    result.posterior_var_z = (monitored.rowwise() - result.posterior_mean_z.transpose()).colwise().squaredNorm() /
                             static_cast<double>(kept);
  }
  if (lag_acc) {
    result.field_acf_lag = lag_acc->lag();
    result.mean_field_acf = lag_acc->mean_acf();
  }
  if (hooks.finish) hooks.finish(result);
  return result;
}

}  // namespace detail

RunResult run_experiment(const ExperimentConfig& config) {
  validate_config(config);
  if (config.gibbs.enabled) return run_lgcp_gibbs(config);
  BuiltModel built = build_model(config.model);
  auto target = std::make_unique<CoefficientTarget>(*built.model);
  return detail::drive_chain(config, *built.model, std::move(target), {});
}

}  // namespace infmcmc

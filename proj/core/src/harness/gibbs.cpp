#include "driver.hpp"
#include "infmcmc/diagnostics/ess.hpp"
#include "infmcmc/errors.hpp"
#include "infmcmc/models/lgcp.hpp"
#include "infmcmc/random.hpp"
#include "infmcmc/samplers/kernels.hpp"

#include <cmath>
#include <limits>

namespace infmcmc {

namespace {

/// Random-walk Metropolis on theta = (log sigma, log tau) with the field held
/// fixed in whitened coordinates, so only Phi(S(theta) z) and the hyperprior
/// enter the ratio.
class HyperBlock {
 public:
  HyperBlock(const ExperimentConfig& config, const LGCPModel& model)
      : model_(model),
        kind_(config.kernel.kind),
        scale_(config.gibbs.proposal_scale),
        target_accept_(config.gibbs.target_accept),
        burn_in_(config.adapt.burn_in),
        thinning_(config.run.thinning),
        proposal_rng_(*config.run.seed, static_cast<std::uint64_t>(Stream::kHyperProposal)),
        accept_rng_(*config.run.seed, static_cast<std::uint64_t>(Stream::kHyperAccept)) {
    theta_ << std::log(model.params().sigma), std::log(model.params().tau);
    const long kept = config.run.iterations - burn_in_;
    trace_.resize(kept, 2);
  }

  void operator()(long t, bool in_burn_in, std::unique_ptr<CoefficientTarget>& target, ChainState& state) {
    const Eigen::Vector2d xi(proposal_rng_.normal(), proposal_rng_.normal());
    const double log_u = std::log(accept_rng_.uniform());
    const Eigen::Vector2d proposal = theta_ + scale_ * xi;

    bool accepted = false;
    try {
      auto prior = model_.covariance_at(std::exp(proposal[0]), std::exp(proposal[1]));
      auto candidate = std::make_unique<CoefficientTarget>(model_, std::move(prior));
      ChainState moved = make_state(*candidate, kind_, state.z);
      const double log_alpha = (-moved.phi + model_.log_hyper_prior(proposal[0], proposal[1])) -
                               (-state.phi + model_.log_hyper_prior(theta_[0], theta_[1]));
      if (!std::isnan(log_alpha) && log_u < log_alpha) {
        accepted = true;
        theta_ = proposal;
        target = std::move(candidate);
        state = std::move(moved);
      }
    } catch (const NumericalError&) {
      ++failures_;
    } catch (const std::invalid_argument&) {
      ++failures_;
    }

    if (in_burn_in && scale_ > 0.0) {
      const double gain = std::pow(static_cast<double>(t), -0.7);
      scale_ *= std::exp(gain * ((accepted ? 1.0 : 0.0) - target_accept_));
    }
    if (!in_burn_in) {
      const long k = t - burn_in_;
      trace_.row(k - 1) = theta_.transpose();
      accepted_kept_ += accepted ? 1 : 0;
    }
  }

  void finish(RunResult& result) const {
    GibbsStats g;
    const long kept = trace_.rows();
    g.theta_acceptance = kept > 0 ? static_cast<double>(accepted_kept_) / kept : 0.0;
    g.theta_failures = failures_;
    g.proposal_scale = scale_;
    const long rows = kept / thinning_;
    g.theta_trace.resize(rows, 2);
    for (long r = 0; r < rows; ++r) g.theta_trace.row(r) = trace_.row((r + 1) * thinning_ - 1);
    if (kept >= 2) {
      for (int c = 0; c < 2; ++c) {
        const Vector col = trace_.col(c);
        g.theta_mean[c] = col.mean();
        const double var = (col.array() - g.theta_mean[c]).square().sum() / kept;
        g.theta_mc_se[c] = std::sqrt(var / ess(col).ess);
      }
    }
    result.gibbs = std::move(g);
  }

 private:
  const LGCPModel& model_;
  KernelKind kind_;
  double scale_;
  double target_accept_;
  long burn_in_;
  int thinning_;
  RandomSource proposal_rng_;
  RandomSource accept_rng_;
  Eigen::Vector2d theta_;
  Eigen::MatrixX2d trace_;
  long accepted_kept_ = 0;
  long failures_ = 0;
};

}  // namespace

RunResult run_lgcp_gibbs(const ExperimentConfig& config) {
  validate_config(config);
  if (config.model.kind != "lgcp") throw ValidationError({"gibbs: requires model.kind = lgcp"});
  BuiltModel built = build_model(config.model);
  const auto& model = static_cast<const LGCPModel&>(*built.model);
  auto target = std::make_unique<CoefficientTarget>(model);

  detail::ChainHooks hooks;
  hooks.field_enabled = config.gibbs.field;
  auto block = std::make_shared<HyperBlock>(config, model);
  if (config.gibbs.theta) {
    hooks.after_field = [block](long t, bool burn_in, std::unique_ptr<CoefficientTarget>& tgt, ChainState& s) {
      (*block)(t, burn_in, tgt, s);
    };
    hooks.finish = [block](RunResult& r) { block->finish(r); };
  }
  return detail::drive_chain(config, model, std::move(target), std::move(hooks));
}

}  // namespace infmcmc

#pragma once

#include "infmcmc/harness/experiment.hpp"
#include "infmcmc/samplers/coefficient_target.hpp"

#include <functional>
#include <memory>

namespace infmcmc::detail {

/// Optional extra block run after each field update, e.g. a hyperparameter
/// move that swaps the prior (and with it the target) under a fixed z.
struct ChainHooks {
  bool field_enabled = true;
  std::function<void(long t, bool burn_in, std::unique_ptr<CoefficientTarget>& target, ChainState& state)> after_field;
  std::function<void(RunResult& result)> finish;
};

RunResult drive_chain(const ExperimentConfig& config, const TargetModel& model,
                      std::unique_ptr<CoefficientTarget> target, ChainHooks hooks);

}  // namespace infmcmc::detail

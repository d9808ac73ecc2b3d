#pragma once

#include "infmcmc/random.hpp"
#include "infmcmc/samplers/coefficient_target.hpp"
#include "infmcmc/samplers/kernel_config.hpp"

namespace infmcmc {

struct StepOutcome {
  Vector proposed_z;
  double log_ratio = 0.0;
  bool accepted = false;
  bool factorisation_failed = false;
  ChainState new_state;
};

/// accept iff log U < J. Throws NumericalError on NaN.
bool mh_accept(double log_ratio, RandomSource& rng);

/// Deterministic part of the kernel: proposal for a given standard normal xi.
/// Throws NumericalError if the kernel needs a factorisation that fails.
Vector propose(const CoefficientTarget& target, const KernelConfig& cfg, const ChainState& from, const Vector& xi);

/// log q(to | from), including normalising constants.
double log_proposal_density(const CoefficientTarget& target, const KernelConfig& cfg, const ChainState& from,
                            const Vector& to);

/// J(u, v), the log Metropolis-Hastings ratio for moving from u to v.
double log_ratio(const CoefficientTarget& target, const KernelConfig& cfg, const ChainState& u, const ChainState& v);

/// One full transition. Always consumes dim normals from rng.noise and one
/// uniform from rng.accept so streams stay aligned across kernels.
StepOutcome step(const CoefficientTarget& target, const KernelConfig& cfg, const ChainState& state, ChainRandom& rng);

StepOutcome pcn_step(const CoefficientTarget&, const KernelConfig&, const ChainState&, ChainRandom&);
StepOutcome pcn_am0_step(const CoefficientTarget&, const KernelConfig&, const ChainState&, ChainRandom&);
StepOutcome pcn_am_step(const CoefficientTarget&, const KernelConfig&, const ChainState&, ChainRandom&);
StepOutcome pcnl_step(const CoefficientTarget&, const KernelConfig&, const ChainState&, ChainRandom&);
StepOutcome pcnl_am_step(const CoefficientTarget&, const KernelConfig&, const ChainState&, ChainRandom&);
StepOutcome pcn_ap_step(const CoefficientTarget&, const KernelConfig&, const ChainState&, ChainRandom&);
StepOutcome pcnl_ap_step(const CoefficientTarget&, const KernelConfig&, const ChainState&, ChainRandom&);
StepOutcome pcnl_hm_step(const CoefficientTarget&, const KernelConfig&, const ChainState&, ChainRandom&);
StepOutcome mala_step(const CoefficientTarget&, const KernelConfig&, const ChainState&, ChainRandom&);
StepOutcome mgrad_step(const CoefficientTarget&, const KernelConfig&, const ChainState&, ChainRandom&);

/// Builds the state caches the kernel needs.
ChainState make_state(const CoefficientTarget& target, KernelKind kind, Vector z);

}  // namespace infmcmc

#pragma once

#include "infmcmc/gaussian/scaling.hpp"
#include "infmcmc/samplers/kernel_config.hpp"

namespace infmcmc {

struct AdaptSettings {
  double target_accept = 0.2;
  int n0 = 5;                 // initial truncation level N_0
  int n_increment = 5;        // N grows by this much ...
  int n_interval = 1000;      // ... every n_interval iterations
  bool untruncated = false;   // estimate every coordinate from the start
  double d_min = kDefaultScalingFloor;
  double gain_exponent = 0.7; // Robbins-Monro gain j^{-gain_exponent}
  double beta_min = 1e-4;
  double beta_max = 1.0;
  int adapt_start = 1000;     // iterations before m~, d~ reach the kernel
  double ema_rate = 0.01;
  bool tune_delta = false;    // tune log(delta) instead of logit(beta)
};

/// Running moment estimates of the coefficient-space posterior and the
/// step-size controller state for one chain.
///
/// m_hat and d_hat are kept for every coordinate; the truncated views m~ and
/// d~ zero the mean and pin the variance to 1 for k >= N_j.
struct AdaptState {
  AdaptSettings settings;
  Vector m_hat;
  Vector d_hat;
  long j = 0;  // completed moment updates; the next weight is 1 / (j + 1)
  int n_trunc = 5;
  long last_growth = 0;
  double beta = 0.5;
  double delta = 1.0;
  long tune_count = 0;
  double accept_ema = 0.0;
  long accepted_total = 0;
  bool frozen = false;

  AdaptState() = default;
  AdaptState(Index dim, AdaptSettings s, double initial_beta, double initial_delta = 1.0);

  Index dim() const { return m_hat.size(); }
  Vector m_tilde() const;
  Vector d_tilde() const;
  DiagonalScaling scaling_tilde() const { return DiagonalScaling(d_tilde(), settings.d_min); }
  /// equivalence_diagnostic of d~, summed over the head only.
  double equivalence() const;
};

/// m_hat <- w z + (1 - w) m_hat, d_hat <- w (z - m_hat)^2 + (1 - w) d_hat with
/// w = 1 / j, clamped at d_min. No-op when frozen.
void update_moments(AdaptState& adapt, const Vector& z);

/// Advances N_j on multiples of n_interval (at most once per j). No-op when frozen.
void apply_truncation(AdaptState& adapt);

/// logit(beta) += j^{-0.7} (accepted - target), or the same on log(delta).
/// Also updates the acceptance EMA. No-op when frozen.
void tune_beta(AdaptState& adapt, bool accepted);
/// Same controller driven by a fractional acceptance indicator in [0, 1].
void tune_beta(AdaptState& adapt, double indicator);

/// Copies the step parameter into cfg and, once j >= adapt_start, the
/// truncated estimates the kernel consumes.
void configure_kernel(const AdaptState& adapt, KernelConfig& cfg);

}  // namespace infmcmc

#include "infmcmc/adaptation/adapt_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace infmcmc {

AdaptState::AdaptState(Index dim, AdaptSettings s, double initial_beta, double initial_delta)
    : settings(s),
      m_hat(Vector::Zero(dim)),
      d_hat(Vector::Ones(dim)),
      beta(initial_beta),
      delta(initial_delta) {
  if (dim < 1) throw std::invalid_argument("AdaptState: dim must be positive");
  if (!(s.target_accept > 0.0 && s.target_accept < 1.0)) throw std::invalid_argument("target_accept must lie in (0, 1)");
  if (s.n0 < 0 || s.n_increment < 0 || s.n_interval < 1) throw std::invalid_argument("invalid truncation schedule");
  n_trunc = s.untruncated ? static_cast<int>(dim) : std::min<int>(s.n0, static_cast<int>(dim));
  accept_ema = s.target_accept;
}

Vector AdaptState::m_tilde() const {
  Vector out = Vector::Zero(dim());
  out.head(n_trunc) = m_hat.head(n_trunc);
  return out;
}

Vector AdaptState::d_tilde() const {
  Vector out = Vector::Ones(dim());
  out.head(n_trunc) = d_hat.head(n_trunc);
  return out;
}

double AdaptState::equivalence() const { return (d_hat.head(n_trunc).array() - 1.0).square().sum(); }

void update_moments(AdaptState& adapt, const Vector& z) {
  if (adapt.frozen) return;
  if (z.size() != adapt.dim()) throw std::invalid_argument("update_moments: dimension mismatch");
  ++adapt.j;
  const double w = 1.0 / static_cast<double>(adapt.j);
  adapt.m_hat = w * z + (1.0 - w) * adapt.m_hat;
  adapt.d_hat = w * (z - adapt.m_hat).array().square().matrix() + (1.0 - w) * adapt.d_hat;
  adapt.d_hat = adapt.d_hat.cwiseMax(adapt.settings.d_min);
}

void apply_truncation(AdaptState& adapt) {
  if (adapt.frozen || adapt.settings.untruncated) return;
  const long j = adapt.j;
  if (j > 0 && j % adapt.settings.n_interval == 0 && j != adapt.last_growth) {
    adapt.n_trunc = std::min<int>(adapt.n_trunc + adapt.settings.n_increment, static_cast<int>(adapt.dim()));
    adapt.last_growth = j;
  }
}

void tune_beta(AdaptState& adapt, bool accepted) {
  if (adapt.frozen) return;
  adapt.accepted_total += accepted ? 1 : 0;
  tune_beta(adapt, accepted ? 1.0 : 0.0);
}

void tune_beta(AdaptState& adapt, double indicator) {
  if (adapt.frozen) return;
  const AdaptSettings& s = adapt.settings;
  ++adapt.tune_count;
  adapt.accept_ema += s.ema_rate * (indicator - adapt.accept_ema);

  const double innovation = indicator - s.target_accept;
  if (innovation == 0.0) return;
  const double gain = std::pow(static_cast<double>(adapt.tune_count), -s.gain_exponent);
  if (s.tune_delta) {
    adapt.delta = std::exp(std::clamp(std::log(adapt.delta) + gain * innovation, -30.0, 30.0));
    return;
  }
  const double b = std::clamp(adapt.beta, 1e-12, 1.0 - 1e-12);
  const double logit = std::log(b) - std::log1p(-b) + gain * innovation;
  adapt.beta = std::clamp(1.0 / (1.0 + std::exp(-logit)), s.beta_min, s.beta_max);
}

void configure_kernel(const AdaptState& adapt, KernelConfig& cfg) {
  cfg.beta = adapt.beta;
  cfg.delta = adapt.delta;
  if (adapt.j < adapt.settings.adapt_start) return;
  if (uses_scaling(cfg.kind)) cfg.scaling = adapt.scaling_tilde();
  if (uses_mean(cfg.kind)) cfg.mean = adapt.m_tilde();
}

}  // namespace infmcmc

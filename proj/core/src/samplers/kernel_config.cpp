#include "infmcmc/samplers/kernel_config.hpp"

#include "infmcmc/errors.hpp"

#include <algorithm>
#include <cmath>

namespace infmcmc {

namespace {

struct KernelName {
  KernelKind kind;
  const char* name;
};

constexpr KernelName kNames[] = {
    {KernelKind::kPcn, "pcn"},         {KernelKind::kPcnAm0, "pcn_am0"}, {KernelKind::kPcnAm, "pcn_am"},
    {KernelKind::kPcnl, "pcnl"},       {KernelKind::kPcnlAm, "pcnl_am"}, {KernelKind::kPcnAp, "pcn_ap"},
    {KernelKind::kPcnlAp, "pcnl_ap"},  {KernelKind::kPcnlHm, "pcnl_hm"}, {KernelKind::kMala, "mala"},
    {KernelKind::kMgrad, "mgrad"},
};

}  // namespace

std::string to_string(KernelKind kind) {
  for (const auto& entry : kNames) {
    if (entry.kind == kind) return entry.name;
  }
  return "unknown";
}

std::optional<KernelKind> parse_kernel_kind(std::string_view name) {
  for (const auto& entry : kNames) {
    if (name == entry.name) return entry.kind;
  }
  return std::nullopt;
}

bool needs_gradient(KernelKind kind) {
  switch (kind) {
    case KernelKind::kPcn:
    case KernelKind::kPcnAm0:
    case KernelKind::kPcnAm:
    case KernelKind::kPcnAp:
      return false;
    default:
      return true;
  }
}

bool needs_hessian(KernelKind kind) { return kind == KernelKind::kPcnlHm; }

bool uses_scaling(KernelKind kind) {
  switch (kind) {
    case KernelKind::kPcnAm0:
    case KernelKind::kPcnAm:
    case KernelKind::kPcnlAm:
    case KernelKind::kPcnAp:
    case KernelKind::kPcnlAp:
    case KernelKind::kMala:
      return true;
    default:
      return false;
  }
}

bool uses_mean(KernelKind kind) { return kind == KernelKind::kPcnAm || kind == KernelKind::kPcnAp; }

bool tunes_delta(KernelKind kind) { return kind == KernelKind::kMgrad; }

double default_target_accept(KernelKind kind) { return needs_gradient(kind) ? 0.5 : 0.2; }

void KernelConfig::validate(Index dim) const {
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0, 1]");
  if (!(delta > 0.0) || !std::isfinite(delta)) throw std::invalid_argument("delta must be positive");
  if (scaling.size() != 0) require_same_size(dim, scaling.size(), "kernel scaling");
  if (mean.size() != 0) require_same_size(dim, mean.size(), "kernel mean");
}

double crank_rho(double beta) { return std::sqrt(std::max(0.0, (1.0 - beta) * (1.0 + beta))); }

double crank_c(double beta) { return beta * beta / (1.0 + crank_rho(beta)); }

double delta_from_beta(double beta) {
  const double rho = crank_rho(beta);
  return 2.0 * beta * beta / ((1.0 + rho) * (1.0 + rho));
}

CoordinateStep coordinate_step(double x) {
  CoordinateStep s;
  s.beta = std::sqrt(8.0 * x) / (2.0 + x);
  s.rho = std::abs(2.0 - x) / (2.0 + x);
  s.c = std::min(2.0 * x, 4.0) / (2.0 + x);
  return s;
}

}  // namespace infmcmc

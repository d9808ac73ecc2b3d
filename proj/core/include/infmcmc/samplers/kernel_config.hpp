#pragma once

#include "infmcmc/gaussian/scaling.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace infmcmc {

enum class KernelKind {
  kPcn,
  kPcnAm0,
  kPcnAm,
  kPcnl,
  kPcnlAm,
  kPcnAp,
  kPcnlAp,
  kPcnlHm,
  kMala,
  kMgrad,
};

inline constexpr std::array<KernelKind, 10> kAllKernels = {
    KernelKind::kPcn,  KernelKind::kPcnAm0, KernelKind::kPcnAm,  KernelKind::kPcnl, KernelKind::kPcnlAm,
    KernelKind::kPcnAp, KernelKind::kPcnlAp, KernelKind::kPcnlHm, KernelKind::kMala, KernelKind::kMgrad,
};

std::string to_string(KernelKind kind);
std::optional<KernelKind> parse_kernel_kind(std::string_view name);

bool needs_gradient(KernelKind kind);
bool needs_hessian(KernelKind kind);
/// Kernels that read the adapted scaling d~.
bool uses_scaling(KernelKind kind);
/// Kernels that read the adapted mean m~.
bool uses_mean(KernelKind kind);
/// mGrad is parameterised by delta rather than beta.
bool tunes_delta(KernelKind kind);
/// 0.2 for gradient-free kernels, 0.5 for gradient kernels.
double default_target_accept(KernelKind kind);

struct KernelConfig {
  KernelKind kind = KernelKind::kPcn;
  double beta = 0.5;
  double delta = 1.0;
  DiagonalScaling scaling;  // empty means identity
  Vector mean;              // empty means zero

  /// Throws std::invalid_argument on beta outside [0, 1] or delta <= 0.
  void validate(Index dim) const;
};

/// rho = sqrt(1 - beta^2)
double crank_rho(double beta);
/// c_beta = 1 - sqrt(1 - beta^2), evaluated as beta^2 / (1 + rho).
double crank_c(double beta);
/// Root in [0, 2] of beta^2 = 8 delta / (2 + delta)^2.
double delta_from_beta(double beta);

/// Per-coordinate constants of the independent-step kernels for x = delta d_i.
struct CoordinateStep {
  double beta;
  double rho;
  double c;
};
CoordinateStep coordinate_step(double x);

}  // namespace infmcmc

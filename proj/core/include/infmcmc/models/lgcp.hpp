#pragma once

#include "infmcmc/models/lattice.hpp"
#include "infmcmc/models/target_model.hpp"

#include <array>

namespace infmcmc {

struct LgcpParams {
  double cell_area = 1.0;
  double sigma = 1.0;   // field standard deviation
  double tau = 22026.0; // range, in lattice length units
  std::array<double, 2> hyper_prior_mean{0.0, 10.0};  // (log sigma, log tau)
  std::array<double, 2> hyper_prior_sd{1.5, 1.5};
  int truncation = 0;
};

/// Log-Gaussian Cox process on a lattice: Y_i ~ Poisson(a exp(U_i)).
/// Phi(u) = sum_i [a e^{u_i} - y_i u_i] + const, with const the negative of the
/// per-cell minima (y_i - y_i log(y_i / a)) so that Phi >= 0. The prior
/// covariance is rebuilt deterministically from (sigma, tau).
class LGCPModel final : public TargetModel {
 public:
  LGCPModel(LatticeSpec lattice, LgcpParams params, Vector counts);

  std::string kind() const override { return "lgcp"; }
  Capabilities capabilities() const override { return {true, true}; }
  std::shared_ptr<const SpectralCovariance> prior() const override { return prior_; }
  double additive_constant() const override { return constant_; }
  GrowthBound growth_bound() const override { return {0.0, 0.0, false}; }

  /// Prior covariance at hyperparameters (sigma, tau).
  std::shared_ptr<const SpectralCovariance> covariance_at(double sigma, double tau) const;
  /// log density of (log sigma, log tau) under the independent normal hyperprior.
  double log_hyper_prior(double log_sigma, double log_tau) const;

  const LatticeSpec& lattice() const { return lattice_; }
  const LgcpParams& params() const { return params_; }
  const Vector& counts() const { return counts_; }

 protected:
  double potential_impl(const Vector& u) const override;
  Vector grad_potential_impl(const Vector& u) const override;
  Vector hessian_potential_impl(const Vector& u) const override;

 private:
  LatticeSpec lattice_;
  LgcpParams params_;
  Vector counts_;
  double constant_ = 0.0;
  std::shared_ptr<const SpectralCovariance> prior_;
};

}  // namespace infmcmc

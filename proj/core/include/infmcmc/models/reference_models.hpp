#pragma once

#include "infmcmc/models/target_model.hpp"

namespace infmcmc {

/// Phi = 0: the posterior is the prior.
class ZeroPotentialModel final : public TargetModel {
 public:
  explicit ZeroPotentialModel(std::shared_ptr<const SpectralCovariance> prior) : prior_(std::move(prior)) {}

  std::string kind() const override { return "prior"; }
  Capabilities capabilities() const override { return {true, true}; }
  std::shared_ptr<const SpectralCovariance> prior() const override { return prior_; }
  GrowthBound growth_bound() const override { return {1.0, 1.0, true}; }

 protected:
  double potential_impl(const Vector&) const override { return 0.0; }
  Vector grad_potential_impl(const Vector& u) const override { return Vector::Zero(u.size()); }
  Vector hessian_potential_impl(const Vector& u) const override { return Vector::Zero(u.size()); }

 private:
  std::shared_ptr<const SpectralCovariance> prior_;
};

/// Direct noisy observation of every nodal value:
/// Phi(u) = |y - u|^2 / (2 noise_sd^2). Conjugate, so posteriors are exact.
class GaussianLikelihoodModel final : public TargetModel {
 public:
  GaussianLikelihoodModel(std::shared_ptr<const SpectralCovariance> prior, Vector observations,
                          double noise_sd = 1.0);

  std::string kind() const override { return "gaussian"; }
  Capabilities capabilities() const override { return {true, true}; }
  std::shared_ptr<const SpectralCovariance> prior() const override { return prior_; }
  GrowthBound growth_bound() const override;

  const Vector& observations() const { return y_; }
  double noise_sd() const { return noise_sd_; }

  /// Exact posterior mean and covariance in nodal coordinates.
  Vector posterior_mean() const;
  Matrix posterior_covariance() const;

 protected:
  double potential_impl(const Vector& u) const override;
  Vector grad_potential_impl(const Vector& u) const override;
  Vector hessian_potential_impl(const Vector& u) const override;

 private:
  std::shared_ptr<const SpectralCovariance> prior_;
  Vector y_;
  double noise_sd_;
};

}  // namespace infmcmc

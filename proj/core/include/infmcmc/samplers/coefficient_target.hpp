#pragma once

#include "infmcmc/models/target_model.hpp"

#include <memory>
#include <mutex>

namespace infmcmc {

/// Current chain position in Karhunen-Loeve coefficients with cached model
/// quantities. grad_z and hess are empty when the kernel does not need them.
struct ChainState {
  Vector z;
  double phi = 0.0;
  Vector grad_z;  // S^T grad Phi(S z)
  Vector hess;    // nodal diagonal of grad grad Phi(S z)
};

/// The posterior pulled back to coefficient space:
///   pi~(z) = exp(-Phi(S z) - |z|^2 / 2).
/// The prior can be overridden so that hierarchical drivers can move the
/// covariance while the model and data stay fixed.
class CoefficientTarget {
 public:
  explicit CoefficientTarget(const TargetModel& model);
  CoefficientTarget(const TargetModel& model, std::shared_ptr<const SpectralCovariance> prior);

  const TargetModel& model() const { return *model_; }
  const SpectralCovariance& prior() const { return *prior_; }
  std::shared_ptr<const SpectralCovariance> prior_ptr() const { return prior_; }
  Index dim() const { return prior_->dim(); }

  double phi(const Vector& z) const;
  Vector grad(const Vector& z) const;
  Vector nodal_hessian(const Vector& z) const;
  /// log pi~(z), unnormalised.
  double log_density(const Vector& z) const;
  double log_density(const ChainState& s) const { return -s.phi - 0.5 * s.z.squaredNorm(); }

  /// Evaluates the caches a kernel needs at z.
  ChainState make_state(Vector z, bool with_gradient, bool with_hessian = false) const;

  /// S as a dense nodal_dim x dim matrix, built on first use.
  const Matrix& dense_sqrt() const;

 private:
  const TargetModel* model_;
  std::shared_ptr<const SpectralCovariance> prior_;
  mutable std::once_flag sqrt_once_;
  mutable Matrix sqrt_;
};

}  // namespace infmcmc

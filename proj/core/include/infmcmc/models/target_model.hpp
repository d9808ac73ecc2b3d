#pragma once

#include "infmcmc/gaussian/spectral_covariance.hpp"

#include <memory>
#include <string>

namespace infmcmc {

struct Capabilities {
  bool has_gradient = false;
  bool has_hessian = false;
};

/// Declared growth envelope 0 <= Phi(u) <= K (1 + |u|^p). Models whose
/// potential grows faster than any polynomial set polynomial = false and
/// only the nonnegativity half is probed.
struct GrowthBound {
  double K = 0.0;
  double p = 1.0;
  bool polynomial = true;
};

/// Posterior dmu1/dmu0(u) = exp(-Phi(u)) against a Gaussian prior mu0 = N(0, C).
///
/// Phi is the negative log-likelihood plus a per-model additive constant that
/// makes it nonnegative; the constant cancels in every acceptance ratio.
/// Hessians are returned as the diagonal of +grad grad Phi (the positive
/// curvature of the negative log-likelihood), so C^{-1} + H is a precision.
class TargetModel {
 public:
  virtual ~TargetModel() = default;

  virtual std::string kind() const = 0;
  virtual Capabilities capabilities() const = 0;
  virtual std::shared_ptr<const SpectralCovariance> prior() const = 0;
  virtual double additive_constant() const { return 0.0; }
  virtual GrowthBound growth_bound() const = 0;

  Index nodal_dim() const { return prior()->nodal_dim(); }
  Index dim() const { return prior()->dim(); }

  /// Phi(u). Throws NumericalError on non-finite input.
  double potential(const Vector& u) const;
  /// grad Phi(u). Throws UnsupportedOperation without a gradient.
  Vector grad_potential(const Vector& u) const;
  /// Diagonal of grad grad Phi(u). Throws UnsupportedOperation without a Hessian.
  Vector hessian_potential(const Vector& u) const;

 protected:
  virtual double potential_impl(const Vector& u) const = 0;
  virtual Vector grad_potential_impl(const Vector& u) const;
  virtual Vector hessian_potential_impl(const Vector& u) const;
};

/// log(1 + e^x) without overflow.
double softplus(double x);
/// 1 / (1 + e^{-x})
double logistic(double x);

}  // namespace infmcmc

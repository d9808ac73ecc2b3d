#include "infmcmc/samplers/coefficient_target.hpp"

#include "infmcmc/errors.hpp"

namespace infmcmc {

CoefficientTarget::CoefficientTarget(const TargetModel& model) : CoefficientTarget(model, model.prior()) {}

CoefficientTarget::CoefficientTarget(const TargetModel& model, std::shared_ptr<const SpectralCovariance> prior)
    : model_(&model), prior_(std::move(prior)) {
  if (!prior_) throw std::invalid_argument("CoefficientTarget: null prior");
  require_same_size(model.nodal_dim(), prior_->nodal_dim(), "CoefficientTarget prior");
}

double CoefficientTarget::phi(const Vector& z) const { return model_->potential(prior_->from_coefficients(z)); }

Vector CoefficientTarget::grad(const Vector& z) const {
  return prior_->whiten_gradient(model_->grad_potential(prior_->from_coefficients(z)));
}

Vector CoefficientTarget::nodal_hessian(const Vector& z) const {
  return model_->hessian_potential(prior_->from_coefficients(z));
}

double CoefficientTarget::log_density(const Vector& z) const { return -phi(z) - 0.5 * z.squaredNorm(); }

ChainState CoefficientTarget::make_state(Vector z, bool with_gradient, bool with_hessian) const {
  require_same_size(dim(), z.size(), "chain state");
  ChainState s;
  const Vector u = prior_->from_coefficients(z);
  s.phi = model_->potential(u);
  if (with_gradient) s.grad_z = prior_->whiten_gradient(model_->grad_potential(u));
  if (with_hessian) s.hess = model_->hessian_potential(u);
  s.z = std::move(z);
  return s;
}

const Matrix& CoefficientTarget::dense_sqrt() const {
  std::call_once(sqrt_once_, [this] { sqrt_ = prior_->dense_sqrt(); });
  return sqrt_;
}

}  // namespace infmcmc

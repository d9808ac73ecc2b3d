#include "infmcmc/models/reference_models.hpp"

#include "infmcmc/errors.hpp"

namespace infmcmc {

GaussianLikelihoodModel::GaussianLikelihoodModel(std::shared_ptr<const SpectralCovariance> prior, Vector observations,
                                                 double noise_sd)
    : prior_(std::move(prior)), y_(std::move(observations)), noise_sd_(noise_sd) {
  require_same_size(prior_->nodal_dim(), y_.size(), "Gaussian observations");
  if (!(noise_sd_ > 0.0)) throw std::invalid_argument("noise_sd must be positive");
}

GrowthBound GaussianLikelihoodModel::growth_bound() const {
  const double s2 = noise_sd_ * noise_sd_;
  return {std::max(y_.squaredNorm(), 1.0) / s2, 2.0, true};
}

double GaussianLikelihoodModel::potential_impl(const Vector& u) const {
  return 0.5 * (y_ - u).squaredNorm() / (noise_sd_ * noise_sd_);
}

Vector GaussianLikelihoodModel::grad_potential_impl(const Vector& u) const {
  return (u - y_) / (noise_sd_ * noise_sd_);
}

Vector GaussianLikelihoodModel::hessian_potential_impl(const Vector& u) const {
  return Vector::Constant(u.size(), 1.0 / (noise_sd_ * noise_sd_));
}

// In coefficient space S^T S = Sigma, so the posterior precision of z is the
// diagonal I + Sigma / s^2.
Vector GaussianLikelihoodModel::posterior_mean() const {
  const double s2 = noise_sd_ * noise_sd_;
  const Vector precision = (Vector::Ones(prior_->dim()) + prior_->eigenvalues() / s2);
  const Vector mz = prior_->whiten_gradient(y_).cwiseQuotient(precision) / s2;
  return prior_->from_coefficients(mz);
}

Matrix GaussianLikelihoodModel::posterior_covariance() const {
  const double s2 = noise_sd_ * noise_sd_;
  const Vector var_z = (Vector::Ones(prior_->dim()) + prior_->eigenvalues() / s2).cwiseInverse();
  const Matrix S = prior_->dense_sqrt();
  return S * var_z.asDiagonal() * S.transpose();
}

}  // namespace infmcmc

#include "infmcmc/models/target_model.hpp"

#include "infmcmc/errors.hpp"

#include <cmath>

namespace infmcmc {

namespace {

void require_finite(const Vector& u, const char* what) {
  if (!u.allFinite()) throw NumericalError(std::string(what) + ": input contains non-finite entries");
}

}  // namespace

double TargetModel::potential(const Vector& u) const {
  require_same_size(nodal_dim(), u.size(), "potential");
  require_finite(u, "potential");
  return potential_impl(u);
}

Vector TargetModel::grad_potential(const Vector& u) const {
  if (!capabilities().has_gradient) throw UnsupportedOperation(kind() + " model has no gradient");
  require_same_size(nodal_dim(), u.size(), "grad_potential");
  require_finite(u, "grad_potential");
  return grad_potential_impl(u);
}

Vector TargetModel::hessian_potential(const Vector& u) const {
  if (!capabilities().has_hessian) throw UnsupportedOperation(kind() + " model has no Hessian");
  require_same_size(nodal_dim(), u.size(), "hessian_potential");
  require_finite(u, "hessian_potential");
  return hessian_potential_impl(u);
}

Vector TargetModel::grad_potential_impl(const Vector&) const {
  throw UnsupportedOperation(kind() + " model has no gradient");
}

Vector TargetModel::hessian_potential_impl(const Vector&) const {
  throw UnsupportedOperation(kind() + " model has no Hessian");
}

double softplus(double x) {
  return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

double logistic(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace infmcmc

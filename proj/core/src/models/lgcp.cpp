#include "infmcmc/models/lgcp.hpp"

#include "infmcmc/errors.hpp"

#include <cmath>
#include <numbers>

namespace infmcmc {

LGCPModel::LGCPModel(LatticeSpec lattice, LgcpParams params, Vector counts)
    : lattice_(lattice), params_(params), counts_(std::move(counts)) {
  require_same_size(lattice_.cells(), counts_.size(), "LGCP counts");
  if (!(params_.cell_area > 0.0)) throw std::invalid_argument("LGCP cell_area must be positive");
  for (int k = 0; k < 2; ++k) {
    if (!(params_.hyper_prior_sd[k] > 0.0)) throw std::invalid_argument("LGCP hyper prior sd must be positive");
  }
  const double a = params_.cell_area;
  for (Index i = 0; i < counts_.size(); ++i) {
    const double y = counts_[i];
    if (!(y >= 0.0) || y != std::floor(y)) throw std::invalid_argument("LGCP counts must be nonnegative integers");
    if (y > 0.0) constant_ -= y - y * std::log(y / a);
  }
  prior_ = covariance_at(params_.sigma, params_.tau);
}

std::shared_ptr<const SpectralCovariance> LGCPModel::covariance_at(double sigma, double tau) const {
  if (!prior_) return range_lattice_covariance(lattice_, sigma, tau, params_.truncation);
  // the cosine basis does not depend on (sigma, tau)
  const Vector eigenvalues = range_lattice_eigenvalues(lattice_, sigma, tau, static_cast<int>(prior_->dim()));
  return std::make_shared<SpectralCovariance>(prior_->basis_ptr(), eigenvalues);
}

double LGCPModel::log_hyper_prior(double log_sigma, double log_tau) const {
  double out = 0.0;
  const double x[2] = {log_sigma, log_tau};
  for (int k = 0; k < 2; ++k) {
    const double s = params_.hyper_prior_sd[k];
    const double r = (x[k] - params_.hyper_prior_mean[k]) / s;
    out += -0.5 * r * r - std::log(s) - 0.5 * std::log(2.0 * std::numbers::pi);
  }
  return out;
}

double LGCPModel::potential_impl(const Vector& u) const {
  const double a = params_.cell_area;
  double phi = constant_;
  for (Index i = 0; i < u.size(); ++i) phi += a * std::exp(u[i]) - counts_[i] * u[i];
  return phi;
}

Vector LGCPModel::grad_potential_impl(const Vector& u) const {
  return params_.cell_area * u.array().exp().matrix() - counts_;
}

Vector LGCPModel::hessian_potential_impl(const Vector& u) const {
  return params_.cell_area * u.array().exp().matrix();
}

}  // namespace infmcmc

#include "infmcmc/gaussian/spectral_covariance.hpp"

#include "infmcmc/errors.hpp"

#include <cmath>
#include <sstream>

namespace infmcmc {

DenseBasis::DenseBasis(Matrix columns) : columns_(std::move(columns)) {
  if (columns_.cols() == 0 || columns_.cols() > columns_.rows()) {
    throw std::invalid_argument("DenseBasis: need 0 < dim <= nodal_dim");
  }
}

Vector DenseBasis::apply(const Vector& coeffs) const {
  require_same_size(dim(), coeffs.size(), "DenseBasis::apply");
  return columns_ * coeffs;
}

Vector DenseBasis::apply_transpose(const Vector& nodal) const {
  require_same_size(nodal_dim(), nodal.size(), "DenseBasis::apply_transpose");
  return columns_.transpose() * nodal;
}

SpectralCovariance::SpectralCovariance(std::shared_ptr<const BasisMap> basis, Vector eigenvalues)
    : basis_(std::move(basis)), eigenvalues_(std::move(eigenvalues)) {
  if (!basis_) throw std::invalid_argument("SpectralCovariance: null basis");
  require_same_size(basis_->dim(), eigenvalues_.size(), "SpectralCovariance eigenvalues");
  for (Index k = 0; k < eigenvalues_.size(); ++k) {
    if (!(eigenvalues_[k] > 0.0) || !std::isfinite(eigenvalues_[k])) {
      std::ostringstream out;
      out << "SpectralCovariance: eigenvalue " << k << " = " << eigenvalues_[k] << " is not positive";
      throw NumericalError(out.str());
    }
    if (k > 0 && eigenvalues_[k] > eigenvalues_[k - 1]) {
      throw std::invalid_argument("SpectralCovariance: eigenvalues must be non-increasing");
    }
  }
  sqrt_eigenvalues_ = eigenvalues_.cwiseSqrt();
}

Vector SpectralCovariance::to_coefficients(const Vector& u) const {
  require_same_size(nodal_dim(), u.size(), "to_coefficients");
  return basis_->apply_transpose(u).cwiseQuotient(sqrt_eigenvalues_);
}

Vector SpectralCovariance::from_coefficients(const Vector& z) const {
  require_same_size(dim(), z.size(), "from_coefficients");
  return basis_->apply(z.cwiseProduct(sqrt_eigenvalues_));
}

Vector SpectralCovariance::whiten_gradient(const Vector& nodal_gradient) const {
  require_same_size(nodal_dim(), nodal_gradient.size(), "whiten_gradient");
  return basis_->apply_transpose(nodal_gradient).cwiseProduct(sqrt_eigenvalues_);
}

Vector SpectralCovariance::apply(const Vector& u) const {
  return basis_->apply(basis_->apply_transpose(u).cwiseProduct(eigenvalues_));
}

Vector SpectralCovariance::apply_inverse(const Vector& u) const {
  return basis_->apply(basis_->apply_transpose(u).cwiseQuotient(eigenvalues_));
}

Vector SpectralCovariance::apply_sqrt(const Vector& u) const {
  return basis_->apply(basis_->apply_transpose(u).cwiseProduct(sqrt_eigenvalues_));
}

Matrix SpectralCovariance::dense_sqrt() const {
  return basis_->dense() * sqrt_eigenvalues_.asDiagonal();
}

Matrix SpectralCovariance::dense() const {
  const Matrix& p = basis_->dense();
  return p * eigenvalues_.asDiagonal() * p.transpose();
}

std::shared_ptr<const SpectralCovariance> diagonal_covariance(const Vector& eigenvalues) {
  auto basis = std::make_shared<DenseBasis>(Matrix::Identity(eigenvalues.size(), eigenvalues.size()));
  return std::make_shared<SpectralCovariance>(std::move(basis), eigenvalues);
}

}  // namespace infmcmc

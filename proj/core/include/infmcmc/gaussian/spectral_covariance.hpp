#pragma once

#include "infmcmc/gaussian/basis.hpp"

#include <memory>

namespace infmcmc {

/// Truncated covariance C = P diag(sigma) P^T with sigma_1 >= ... >= sigma_n > 0.
///
/// The Karhunen-Loeve coefficient transform z = S^{-1} u with S = P Sigma^{1/2}
/// whitens the prior: under N(0, C) the coefficients are i.i.d. standard normal.
/// Immutable after construction.
class SpectralCovariance {
 public:
  SpectralCovariance(std::shared_ptr<const BasisMap> basis, Vector eigenvalues);

  Index dim() const { return eigenvalues_.size(); }
  Index nodal_dim() const { return basis_->nodal_dim(); }
  const Vector& eigenvalues() const { return eigenvalues_; }
  const Vector& sqrt_eigenvalues() const { return sqrt_eigenvalues_; }
  const BasisMap& basis() const { return *basis_; }
  std::shared_ptr<const BasisMap> basis_ptr() const { return basis_; }

  /// z = Sigma^{-1/2} P^T u
  Vector to_coefficients(const Vector& u) const;
  /// u = P Sigma^{1/2} z
  Vector from_coefficients(const Vector& z) const;
  /// S^T x = Sigma^{1/2} P^T x; maps a nodal gradient to coefficient space.
  Vector whiten_gradient(const Vector& nodal_gradient) const;

  Vector apply(const Vector& u) const;          // C u
  Vector apply_inverse(const Vector& u) const;  // C^{-1} u on range(P)
  Vector apply_sqrt(const Vector& u) const;     // C^{1/2} u

  /// S as an explicit nodal_dim x dim matrix.
  Matrix dense_sqrt() const;
  Matrix dense() const;

 private:
  std::shared_ptr<const BasisMap> basis_;
  Vector eigenvalues_;
  Vector sqrt_eigenvalues_;
};

/// Covariance with P = I, handy for diagonal priors.
std::shared_ptr<const SpectralCovariance> diagonal_covariance(const Vector& eigenvalues);

}  // namespace infmcmc

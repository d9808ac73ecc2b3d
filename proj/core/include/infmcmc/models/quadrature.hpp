#pragma once

#include "infmcmc/models/target_model.hpp"

#include <functional>

namespace infmcmc {

struct PosteriorMoments {
  Vector mean;      // nodal
  Matrix covariance;
};

/// Tensor-grid trapezoid quadrature of exp(-Phi(u)) N(u; 0, C), carried out
/// in whitened coordinates z = S^{-1} u on [-8, 8]^dim (the nodal box of
/// half-width 8 sqrt(sigma_k) along each eigenvector). Brute-force oracle
/// for dim <= 3.
PosteriorMoments quadrature_posterior_moments(const TargetModel& model, int grid_points_per_dim);

/// Posterior expectation of an arbitrary vector-valued function of u by the
/// same quadrature.
Vector quadrature_expectation(const TargetModel& model, int grid_points_per_dim,
                              const std::function<Vector(const Vector&)>& f);

}  // namespace infmcmc

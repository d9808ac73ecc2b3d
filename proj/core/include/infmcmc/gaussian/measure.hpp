#pragma once

#include "infmcmc/gaussian/scaling.hpp"
#include "infmcmc/gaussian/spectral_covariance.hpp"

#include <memory>
#include <optional>

namespace infmcmc {

class RandomSource;

/// Gaussian measure N(S mean, S Lambda S^T), described in coefficient space.
struct GaussianMeasure {
  Vector mean;
  std::shared_ptr<const SpectralCovariance> cov;
  std::optional<DiagonalScaling> scaling;
};

/// Coefficient-space draw mean + Lambda^{1/2} xi.
Vector sample_prior(const GaussianMeasure& measure, RandomSource& rng);

}  // namespace infmcmc

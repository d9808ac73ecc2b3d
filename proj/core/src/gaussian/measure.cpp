#include "infmcmc/gaussian/measure.hpp"

#include "infmcmc/errors.hpp"
#include "infmcmc/random.hpp"

#include <cmath>

namespace infmcmc {

DiagonalScaling::DiagonalScaling(Vector d, double floor) : d_(std::move(d)), floor_(floor) {
  for (Index k = 0; k < d_.size(); ++k) {
    if (std::isnan(d_[k])) throw NumericalError("DiagonalScaling: NaN entry");
    d_[k] = std::max(d_[k], floor_);
  }
}

DiagonalScaling DiagonalScaling::identity(Index n) { return DiagonalScaling(Vector::Ones(n)); }

bool DiagonalScaling::is_identity() const { return (d_.array() == 1.0).all(); }

double equivalence_diagnostic(const DiagonalScaling& scaling) {
  return (scaling.values().array() - 1.0).square().sum();
}

double change_of_measure_logterm(const Vector& z, const DiagonalScaling& scaling) {
  require_same_size(scaling.size(), z.size(), "change_of_measure_logterm");
  return 0.5 * ((1.0 - scaling.values().array().inverse()) * z.array().square()).sum();
}

double cameron_martin_norm_sq(const Vector& m, const DiagonalScaling& scaling) {
  require_same_size(scaling.size(), m.size(), "cameron_martin_norm_sq");
  return (m.array().square() / scaling.values().array()).sum();
}

Vector sample_prior(const GaussianMeasure& measure, RandomSource& rng) {
  const Index n = measure.cov ? measure.cov->dim() : measure.mean.size();
  Vector xi = rng.standard_normal(n);
  Vector z = measure.mean.size() == 0 ? Vector::Zero(n) : measure.mean;
  require_same_size(n, z.size(), "sample_prior mean");
  if (measure.scaling) {
    require_same_size(n, measure.scaling->size(), "sample_prior scaling");
    z.array() += measure.scaling->values().array().sqrt() * xi.array();
  } else {
    z += xi;
  }
  return z;
}

}  // namespace infmcmc

#pragma once

#include "infmcmc/gaussian/basis.hpp"

namespace infmcmc {

inline constexpr double kDefaultScalingFloor = 1e-8;

/// Multiplicative perturbation Lambda = diag(d) of the prior eigenvalues.
/// Entries below the floor are clamped on construction.
class DiagonalScaling {
 public:
  DiagonalScaling() = default;
  explicit DiagonalScaling(Vector d, double floor = kDefaultScalingFloor);
  static DiagonalScaling identity(Index n);

  Index size() const { return d_.size(); }
  const Vector& values() const { return d_; }
  double operator[](Index k) const { return d_[k]; }
  double floor() const { return floor_; }
  bool is_identity() const;

 private:
  Vector d_;
  double floor_ = kDefaultScalingFloor;
};

/// sum_k (d_k - 1)^2, the Hilbert-Schmidt test for equivalence of
/// N(0, S Lambda S^T) with N(0, S S^T).
double equivalence_diagnostic(const DiagonalScaling& scaling);

/// 0.5 * sum_k (1 - 1/d_k) z_k^2: the quadratic that turns Phi into the
/// potential relative to N(0, S Lambda S^T).
double change_of_measure_logterm(const Vector& z, const DiagonalScaling& scaling);

/// sum_k m_k^2 / d_k.
double cameron_martin_norm_sq(const Vector& m, const DiagonalScaling& scaling);

}  // namespace infmcmc

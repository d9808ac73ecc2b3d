#pragma once

#include "infmcmc/models/lattice.hpp"
#include "infmcmc/models/target_model.hpp"

#include <vector>

namespace infmcmc {

struct BinomialParams {
  double kappa = 0.3;
  double sigma = 1.0;
  int precision_exponent = 2;  // alpha; only 2 is supported
  int truncation = 0;
  double obs_fraction = 0.2;   // used by the simulator
  double lambda_trials = 4.0;  // n_i - 1 ~ Poisson(lambda_trials)
};

/// Sparse binomial observations of a lattice field.
struct BinomialData {
  std::vector<int> cells;  // flat cell indices
  std::vector<int> trials;
  std::vector<int> successes;
};

/// Binomial likelihood over a Matern lattice field,
/// Y_i ~ Bin(n_i, logistic(U(s_i))) on the observed cells. Phi carries the
/// constant sum_i n_i [p_i log p_i + (1 - p_i) log(1 - p_i)], p_i = y_i / n_i,
/// which is the negative of the per-cell minimum, so Phi >= 0.
class BinomialLatticeModel final : public TargetModel {
 public:
  BinomialLatticeModel(LatticeSpec lattice, BinomialParams params, BinomialData data);

  std::string kind() const override { return "binomial"; }
  Capabilities capabilities() const override { return {true, true}; }
  std::shared_ptr<const SpectralCovariance> prior() const override { return prior_; }
  double additive_constant() const override { return constant_; }
  GrowthBound growth_bound() const override;

  const LatticeSpec& lattice() const { return lattice_; }
  const BinomialParams& params() const { return params_; }
  const BinomialData& data() const { return data_; }

 protected:
  double potential_impl(const Vector& u) const override;
  Vector grad_potential_impl(const Vector& u) const override;
  Vector hessian_potential_impl(const Vector& u) const override;

 private:
  LatticeSpec lattice_;
  BinomialParams params_;
  BinomialData data_;
  double constant_ = 0.0;
  std::shared_ptr<const SpectralCovariance> prior_;
};

}  // namespace infmcmc

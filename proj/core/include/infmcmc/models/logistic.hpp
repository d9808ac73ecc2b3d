#pragma once

#include "infmcmc/models/target_model.hpp"

#include <optional>
#include <vector>

namespace infmcmc {

struct LogisticParams {
  double kernel_variance = 1.0;  // sigma_x^2
  double lengthscale = 1.0;
  std::optional<double> jitter;  // defaults to 1e-8 * kernel_variance
  int truncation = 0;            // leading KL modes kept; 0 keeps all N
};

struct ClassifierData {
  Matrix locations;  // N x D
  Eigen::VectorXi labels;  // N, values in {0, 1}
};

/// Kernel sigma_x^2 exp(-|s_i - s_j| / (2 l^2)) plus jitter on the diagonal,
/// eigendecomposed densely and truncated to the leading modes.
std::shared_ptr<const SpectralCovariance> kernel_covariance(const Matrix& locations, const LogisticParams& params);

/// Gaussian process binary classifier, Y_i ~ Bernoulli(logistic(U(s_i))).
/// Phi(u) = sum_i [log(1 + e^{u_i}) - y_i u_i] which is already nonnegative.
class LogisticClassifierModel final : public TargetModel {
 public:
  LogisticClassifierModel(ClassifierData data, LogisticParams params);

  std::string kind() const override { return "logistic"; }
  Capabilities capabilities() const override { return {true, true}; }
  std::shared_ptr<const SpectralCovariance> prior() const override { return prior_; }
  GrowthBound growth_bound() const override;

  const ClassifierData& data() const { return data_; }
  const LogisticParams& params() const { return params_; }

 protected:
  double potential_impl(const Vector& u) const override;
  Vector grad_potential_impl(const Vector& u) const override;
  Vector hessian_potential_impl(const Vector& u) const override;

 private:
  ClassifierData data_;
  LogisticParams params_;
  Vector labels_;
  std::shared_ptr<const SpectralCovariance> prior_;
};

}  // namespace infmcmc

#include "infmcmc/models/logistic.hpp"

#include "infmcmc/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <sstream>

namespace infmcmc {

std::shared_ptr<const SpectralCovariance> kernel_covariance(const Matrix& locations, const LogisticParams& params) {
  const Index n = locations.rows();
  if (n < 1) throw std::invalid_argument("kernel_covariance: no locations");
  if (!(params.kernel_variance > 0.0) || !(params.lengthscale > 0.0)) {
    throw std::invalid_argument("kernel_covariance: kernel_variance and lengthscale must be positive");
  }
  const double jitter = params.jitter.value_or(1e-8 * params.kernel_variance);
  const double inv = 1.0 / (2.0 * params.lengthscale * params.lengthscale);

  Matrix K(n, n);
  for (Index i = 0; i < n; ++i) {
    K(i, i) = params.kernel_variance + jitter;
    for (Index j = 0; j < i; ++j) {
      const double dist = (locations.row(i) - locations.row(j)).norm();
      K(i, j) = K(j, i) = params.kernel_variance * std::exp(-inv * dist);
    }
  }

  Eigen::SelfAdjointEigenSolver<Matrix> eig(K);
  if (eig.info() != Eigen::Success) throw NumericalError("kernel_covariance: eigendecomposition failed");
  if (!(eig.eigenvalues()[0] > 0.0)) {
    std::ostringstream out;
    out << "kernel matrix not positive definite after jitter (smallest eigenvalue " << eig.eigenvalues()[0] << ")";
    throw NumericalError(out.str());
  }
  const Index dim = params.truncation > 0 ? std::min<Index>(params.truncation, n) : n;
  // Eigen sorts ascending; keep the leading (largest) modes first
  Matrix columns(n, dim);
  Vector values(dim);
  for (Index k = 0; k < dim; ++k) {
    columns.col(k) = eig.eigenvectors().col(n - 1 - k);
    values[k] = eig.eigenvalues()[n - 1 - k];
  }
  return std::make_shared<SpectralCovariance>(std::make_shared<DenseBasis>(std::move(columns)), std::move(values));
}

LogisticClassifierModel::LogisticClassifierModel(ClassifierData data, LogisticParams params)
    : data_(std::move(data)), params_(params) {
  require_same_size(data_.locations.rows(), data_.labels.size(), "classifier labels");
  labels_ = data_.labels.cast<double>();
  for (Index i = 0; i < labels_.size(); ++i) {
    if (data_.labels[i] != 0 && data_.labels[i] != 1) throw std::invalid_argument("classifier labels must be 0 or 1");
  }
  prior_ = kernel_covariance(data_.locations, params_);
}

GrowthBound LogisticClassifierModel::growth_bound() const {
  const double n = static_cast<double>(labels_.size());
  return {std::max(n * std::numbers::ln2, std::sqrt(n)), 1.0, true};
}

double LogisticClassifierModel::potential_impl(const Vector& u) const {
  double phi = 0.0;
  for (Index i = 0; i < u.size(); ++i) phi += softplus(u[i]) - labels_[i] * u[i];
  return phi;
}

Vector LogisticClassifierModel::grad_potential_impl(const Vector& u) const {
  Vector g(u.size());
  for (Index i = 0; i < u.size(); ++i) g[i] = logistic(u[i]) - labels_[i];
  return g;
}

Vector LogisticClassifierModel::hessian_potential_impl(const Vector& u) const {
  Vector h(u.size());
  for (Index i = 0; i < u.size(); ++i) {
    const double p = logistic(u[i]);
    h[i] = p * (1.0 - p);
  }
  return h;
}

}  // namespace infmcmc

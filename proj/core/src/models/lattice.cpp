#include "infmcmc/models/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace infmcmc {

namespace {

void validate(const LatticeSpec& lattice) {
  if (lattice.rows < 1 || lattice.cols < 1) throw std::invalid_argument("lattice needs rows, cols >= 1");
  if (!(lattice.spacing > 0.0)) throw std::invalid_argument("lattice spacing must be positive");
}

int effective_dim(const LatticeSpec& lattice, int truncation) {
  if (truncation < 0) throw std::invalid_argument("truncation must be >= 0");
  return truncation == 0 ? lattice.cells() : std::min(truncation, lattice.cells());
}

std::shared_ptr<const SpectralCovariance> assemble(const LatticeSpec& lattice, const std::vector<int>& order,
                                                   const Vector& spectrum, int dim) {
  std::vector<int> kept(order.begin(), order.begin() + dim);
  Vector eigenvalues(dim);
  for (int k = 0; k < dim; ++k) {
    eigenvalues[k] = spectrum[kept[k]];
    // pow is not guaranteed monotone in the last ulp
    if (k > 0) eigenvalues[k] = std::min(eigenvalues[k], eigenvalues[k - 1]);
  }
  auto basis = std::make_shared<CosineBasis>(lattice.rows, lattice.cols, std::move(kept));
  return std::make_shared<SpectralCovariance>(std::move(basis), std::move(eigenvalues));
}

}  // namespace

Vector neumann_laplacian_eigenvalues(const LatticeSpec& lattice) {
  validate(lattice);
  const double scale = 4.0 / (lattice.spacing * lattice.spacing);
  Vector out(lattice.cells());
  for (int r = 0; r < lattice.rows; ++r) {
    const double sr = std::sin(std::numbers::pi * r / (2.0 * lattice.rows));
    for (int c = 0; c < lattice.cols; ++c) {
      const double sc = std::sin(std::numbers::pi * c / (2.0 * lattice.cols));
      out[lattice.flat(r, c)] = scale * (sr * sr + sc * sc);
    }
  }
  return out;
}

Matrix neumann_laplacian_matrix(const LatticeSpec& lattice) {
  validate(lattice);
  const double w = 1.0 / (lattice.spacing * lattice.spacing);
  Matrix L = Matrix::Zero(lattice.cells(), lattice.cells());
  auto link = [&](int a, int b) {
    L(a, a) += w;
    L(b, b) += w;
    L(a, b) -= w;
    L(b, a) -= w;
  };
  for (int r = 0; r < lattice.rows; ++r) {
    for (int c = 0; c < lattice.cols; ++c) {
      if (r + 1 < lattice.rows) link(lattice.flat(r, c), lattice.flat(r + 1, c));
      if (c + 1 < lattice.cols) link(lattice.flat(r, c), lattice.flat(r, c + 1));
    }
  }
  return L;
}

std::vector<int> laplacian_frequency_order(const LatticeSpec& lattice) {
  const Vector lambda = neumann_laplacian_eigenvalues(lattice);
  std::vector<int> order(lattice.cells());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return lambda[a] < lambda[b]; });
  return order;
}

std::shared_ptr<const SpectralCovariance> matern_lattice_covariance(const LatticeSpec& lattice, double kappa,
                                                                    double sigma, int alpha, int truncation) {
  validate(lattice);
  if (!(kappa > 0.0) || !(sigma > 0.0)) throw std::invalid_argument("kappa and sigma must be positive");
  if (alpha < 1) throw std::invalid_argument("precision exponent must be >= 1");
  const Vector lambda = neumann_laplacian_eigenvalues(lattice);
  Vector spectrum(lambda.size());
  for (Index i = 0; i < lambda.size(); ++i) spectrum[i] = sigma * sigma * std::pow(kappa * kappa + lambda[i], -alpha);
  return assemble(lattice, laplacian_frequency_order(lattice), spectrum, effective_dim(lattice, truncation));
}

Vector range_lattice_eigenvalues(const LatticeSpec& lattice, double sigma, double tau, int dim) {
  validate(lattice);
  if (!(sigma > 0.0) || !(tau > 0.0) || !std::isfinite(sigma) || !std::isfinite(tau)) {
    throw std::invalid_argument("sigma and tau must be positive and finite");
  }
  const double kappa = std::sqrt(8.0) / tau;
  const Vector lambda = neumann_laplacian_eigenvalues(lattice);
  Vector spectrum(lambda.size());
  for (Index i = 0; i < lambda.size(); ++i) {
    const double q = kappa * kappa + lambda[i];
    spectrum[i] = 1.0 / (q * q);
  }
  // mean marginal variance of the untruncated field is trace / cells
  spectrum *= sigma * sigma * lattice.cells() / spectrum.sum();
  const std::vector<int> order = laplacian_frequency_order(lattice);
  Vector out(dim);
  for (int k = 0; k < dim; ++k) {
    out[k] = spectrum[order[k]];
    if (k > 0) out[k] = std::min(out[k], out[k - 1]);
  }
  return out;
}

std::shared_ptr<const SpectralCovariance> range_lattice_covariance(const LatticeSpec& lattice, double sigma,
                                                                   double tau, int truncation) {
  const int dim = effective_dim(lattice, truncation);
  const Vector eigenvalues = range_lattice_eigenvalues(lattice, sigma, tau, dim);
  std::vector<int> order = laplacian_frequency_order(lattice);
  order.resize(dim);
  auto basis = std::make_shared<CosineBasis>(lattice.rows, lattice.cols, std::move(order));
  return std::make_shared<SpectralCovariance>(std::move(basis), eigenvalues);
}

}  // namespace infmcmc

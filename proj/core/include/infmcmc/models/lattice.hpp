#pragma once

#include "infmcmc/gaussian/spectral_covariance.hpp"

#include <memory>
#include <vector>

namespace infmcmc {

/// Regular rows x cols cell-centred lattice with spacing h.
struct LatticeSpec {
  int rows = 16;
  int cols = 16;
  double spacing = 1.0;

  int cells() const { return rows * cols; }
  int flat(int r, int c) const { return r * cols + c; }
};

/// Eigenvalues of -Delta_h (5-point stencil, Neumann boundary) indexed by flat
/// frequency r * cols + c: (4/h^2) (sin^2(pi r / 2 rows) + sin^2(pi c / 2 cols)).
Vector neumann_laplacian_eigenvalues(const LatticeSpec& lattice);

/// Explicit -Delta_h as a dense cells x cells matrix (test oracle and small grids).
Matrix neumann_laplacian_matrix(const LatticeSpec& lattice);

/// Flat frequencies sorted by increasing Laplacian eigenvalue (ties by index).
std::vector<int> laplacian_frequency_order(const LatticeSpec& lattice);

/// Matern-type lattice prior with precision sigma^{-2} (kappa^2 I - Delta_h)^alpha,
/// i.e. covariance eigenvalues sigma^2 (kappa^2 + lambda)^{-alpha} in the cosine
/// basis. truncation = 0 keeps every cell.
std::shared_ptr<const SpectralCovariance> matern_lattice_covariance(const LatticeSpec& lattice, double kappa,
                                                                    double sigma, int alpha, int truncation = 0);

/// Leading `dim` eigenvalues of the range-parameterised covariance below, in
/// the order of laplacian_frequency_order.
Vector range_lattice_eigenvalues(const LatticeSpec& lattice, double sigma, double tau, int dim);

/// Same operator family rescaled so the average marginal variance is sigma^2;
/// range parameterised by tau with kappa = sqrt(8) / tau (smoothness nu = 1).
std::shared_ptr<const SpectralCovariance> range_lattice_covariance(const LatticeSpec& lattice, double sigma,
                                                                   double tau, int truncation = 0);

}  // namespace infmcmc

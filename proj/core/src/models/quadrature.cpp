#include "infmcmc/models/quadrature.hpp"

#include "infmcmc/errors.hpp"

#include <cmath>
#include <limits>

namespace infmcmc {

namespace {

constexpr double kHalfWidth = 8.0;

// Trapezoid rule in whitened coordinates z = S^{-1} u on [-8, 8]^dim, which is
// the nodal box [-8 sqrt(sigma_k), 8 sqrt(sigma_k)] rotated into the eigenbasis.
// Weights are accumulated with a running maximum so exp(-Phi) never underflows.
Vector integrate(const TargetModel& model, int points, Index out_size,
                 const std::function<void(const Vector& z, const Vector& u, Vector& out)>& integrand) {
  const auto prior = model.prior();
  const Index dim = prior->dim();
  if (dim > 3) throw UnsupportedOperation("quadrature oracle supports dim <= 3");
  if (points < 50) throw std::invalid_argument("quadrature needs at least 50 grid points per dimension");

  const double h = 2.0 * kHalfWidth / (points - 1);
  Index total = 1;
  for (Index d = 0; d < dim; ++d) total *= points;

  Vector acc = Vector::Zero(out_size);
  Vector value(out_size);
  double mass = 0.0;
  double shift = -std::numeric_limits<double>::infinity();
  Vector z(dim);
  for (Index flat = 0; flat < total; ++flat) {
    Index rest = flat;
    double edge = 1.0;
    for (Index d = 0; d < dim; ++d) {
      const Index i = rest % points;
      rest /= points;
      z[d] = -kHalfWidth + h * i;
      if (i == 0 || i == points - 1) edge *= 0.5;
    }
    const Vector u = prior->from_coefficients(z);
    const double logw = -model.potential(u) - 0.5 * z.squaredNorm();
    if (logw > shift) {
      const double r = std::exp(shift - logw);
      acc *= r;
      mass *= r;
      shift = logw;
    }
    const double w = edge * std::exp(logw - shift);
    integrand(z, u, value);
    acc += w * value;
    mass += w;
  }
  return acc / mass;
}

}  // namespace

PosteriorMoments quadrature_posterior_moments(const TargetModel& model, int grid_points_per_dim) {
  const Index n = model.dim();
  const Vector raw = integrate(model, grid_points_per_dim, n + n * n, [n](const Vector& z, const Vector&, Vector& out) {
    out.head(n) = z;
    Eigen::Map<Matrix>(out.data() + n, n, n) = z * z.transpose();
  });
  const Vector mz = raw.head(n);
  const Matrix second = Eigen::Map<const Matrix>(raw.data() + n, n, n);
  const Matrix cov_z = second - mz * mz.transpose();

  const auto prior = model.prior();
  const Matrix S = prior->dense_sqrt();
  PosteriorMoments out;
  out.mean = S * mz;
  out.covariance = S * cov_z * S.transpose();
  return out;
}

Vector quadrature_expectation(const TargetModel& model, int grid_points_per_dim,
                              const std::function<Vector(const Vector&)>& f) {
  const Index size = f(Vector::Zero(model.nodal_dim())).size();
  return integrate(model, grid_points_per_dim, size,
                   [&f](const Vector&, const Vector& u, Vector& out) { out = f(u); });
}

}  // namespace infmcmc

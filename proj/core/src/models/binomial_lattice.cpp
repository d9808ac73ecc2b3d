#include "infmcmc/models/binomial_lattice.hpp"

#include "infmcmc/errors.hpp"

#include <cmath>
#include <sstream>

namespace infmcmc {

namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

BinomialLatticeModel::BinomialLatticeModel(LatticeSpec lattice, BinomialParams params, BinomialData data)
    : lattice_(lattice), params_(params), data_(std::move(data)) {
  if (params_.precision_exponent != 2) throw std::invalid_argument("binomial model supports precision_exponent = 2 only");
  if (data_.trials.size() != data_.cells.size() || data_.successes.size() != data_.cells.size()) {
    throw DimensionMismatch("binomial data: cells, trials and successes must have equal length");
  }
  for (std::size_t i = 0; i < data_.cells.size(); ++i) {
    std::ostringstream where;
    where << "binomial observation " << i << ": ";
    if (data_.cells[i] < 0 || data_.cells[i] >= lattice_.cells()) throw std::invalid_argument(where.str() + "cell outside lattice");
    if (data_.trials[i] < 1) throw std::invalid_argument(where.str() + "trials must be >= 1");
    if (data_.successes[i] < 0 || data_.successes[i] > data_.trials[i]) {
      throw std::invalid_argument(where.str() + "successes must lie in [0, trials]");
    }
    const double n = data_.trials[i];
    const double p = data_.successes[i] / n;
    constant_ += n * (xlogx(p) + xlogx(1.0 - p));
  }
  prior_ = matern_lattice_covariance(lattice_, params_.kappa, params_.sigma, params_.precision_exponent,
                                     params_.truncation);
}

GrowthBound BinomialLatticeModel::growth_bound() const {
  double total = 0.0;
  for (int n : data_.trials) total += n;
  return {std::max(total, 1.0), 1.0, true};
}

double BinomialLatticeModel::potential_impl(const Vector& u) const {
  double phi = constant_;
  for (std::size_t i = 0; i < data_.cells.size(); ++i) {
    const double x = u[data_.cells[i]];
    phi += data_.trials[i] * softplus(x) - data_.successes[i] * x;
  }
  return phi;
}

Vector BinomialLatticeModel::grad_potential_impl(const Vector& u) const {
  Vector g = Vector::Zero(u.size());
  for (std::size_t i = 0; i < data_.cells.size(); ++i) {
    const int c = data_.cells[i];
    g[c] += data_.trials[i] * logistic(u[c]) - data_.successes[i];
  }
  return g;
}

Vector BinomialLatticeModel::hessian_potential_impl(const Vector& u) const {
  Vector h = Vector::Zero(u.size());
  for (std::size_t i = 0; i < data_.cells.size(); ++i) {
    const int c = data_.cells[i];
    const double p = logistic(u[c]);
    h[c] += data_.trials[i] * p * (1.0 - p);
  }
  return h;
}

}  // namespace infmcmc

#include "infmcmc/models/simulate.hpp"

#include "infmcmc/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace infmcmc {

namespace {

Vector draw_field(const SpectralCovariance& prior, RandomSource& rng) {
  return prior.from_coefficients(rng.standard_normal(prior.dim()));
}

}  // namespace

Simulated<ClassifierData> simulate_classifier(int num_points, int input_dim, const LogisticParams& params,
                                              std::uint64_t true_field_seed, std::uint64_t obs_seed) {
  if (num_points < 1 || input_dim < 1) throw std::invalid_argument("simulate_classifier: need N, D >= 1");
  RandomSource field_rng(true_field_seed);
  RandomSource obs_rng(obs_seed);

  Simulated<ClassifierData> out;
  out.data.locations.resize(num_points, input_dim);
  for (int i = 0; i < num_points; ++i) {
    for (int d = 0; d < input_dim; ++d) out.data.locations(i, d) = field_rng.uniform();
  }
  const auto prior = kernel_covariance(out.data.locations, params);
  out.true_field = draw_field(*prior, field_rng);
  out.data.labels.resize(num_points);
  for (int i = 0; i < num_points; ++i) {
    out.data.labels[i] = obs_rng.uniform() < logistic(out.true_field[i]) ? 1 : 0;
  }
  return out;
}

Simulated<BinomialData> simulate_binomial(const LatticeSpec& lattice, const BinomialParams& params,
                                          std::uint64_t true_field_seed, std::uint64_t obs_seed) {
  if (!(params.obs_fraction > 0.0) || params.obs_fraction > 1.0) {
    throw std::invalid_argument("simulate_binomial: obs_fraction must lie in (0, 1]");
  }
  if (!(params.lambda_trials > 0.0)) throw std::invalid_argument("simulate_binomial: lambda_trials must be positive");
  RandomSource field_rng(true_field_seed);
  RandomSource obs_rng(obs_seed);
  const auto prior = matern_lattice_covariance(lattice, params.kappa, params.sigma, params.precision_exponent,
                                               params.truncation);

  Simulated<BinomialData> out;
  out.true_field = draw_field(*prior, field_rng);

  // partial Fisher-Yates so the subset only depends on the uniform stream
  std::vector<int> cells(lattice.cells());
  std::iota(cells.begin(), cells.end(), 0);
  const int observed = std::max(1, static_cast<int>(std::lround(params.obs_fraction * lattice.cells())));
  for (int i = 0; i < observed; ++i) {
    const int j = i + static_cast<int>(obs_rng.uniform() * (lattice.cells() - i));
    std::swap(cells[i], cells[j]);
  }
  cells.resize(observed);
  std::sort(cells.begin(), cells.end());

  std::poisson_distribution<int> extra(params.lambda_trials);
  for (int c : cells) {
    const int n = 1 + extra(obs_rng.engine());
    const double p = logistic(out.true_field[c]);
    int y = 0;
    for (int t = 0; t < n; ++t) y += obs_rng.uniform() < p ? 1 : 0;
    out.data.cells.push_back(c);
    out.data.trials.push_back(n);
    out.data.successes.push_back(y);
  }
  return out;
}

Simulated<Vector> simulate_lgcp(const LatticeSpec& lattice, const LgcpParams& params, std::uint64_t true_field_seed,
                                std::uint64_t obs_seed) {
  RandomSource field_rng(true_field_seed);
  RandomSource obs_rng(obs_seed);
  const auto prior = range_lattice_covariance(lattice, params.sigma, params.tau, params.truncation);

  Simulated<Vector> out;
  out.true_field = draw_field(*prior, field_rng);
  out.data.resize(lattice.cells());
  for (int i = 0; i < lattice.cells(); ++i) {
    std::poisson_distribution<int> count(params.cell_area * std::exp(out.true_field[i]));
    out.data[i] = count(obs_rng.engine());
  }
  return out;
}

}  // namespace infmcmc

#pragma once

#include "infmcmc/models/binomial_lattice.hpp"
#include "infmcmc/models/lgcp.hpp"
#include "infmcmc/models/logistic.hpp"

#include <cstdint>

namespace infmcmc {

/// Synthetic data plus the field that generated it.
template <class Data>
struct Simulated {
  Data data;
  Vector true_field;  // nodal
};

/// Locations uniform on [0,1]^D and the latent field come from the
/// true-field seed; labels from the observation seed.
Simulated<ClassifierData> simulate_classifier(int num_points, int input_dim, const LogisticParams& params,
                                              std::uint64_t true_field_seed, std::uint64_t obs_seed);

/// Observed cells are a random obs_fraction subset; n_i = 1 + Poisson(lambda_trials).
Simulated<BinomialData> simulate_binomial(const LatticeSpec& lattice, const BinomialParams& params,
                                          std::uint64_t true_field_seed, std::uint64_t obs_seed);

/// Counts Y_i ~ Poisson(a exp(U_i)) at the configured (sigma, tau).
Simulated<Vector> simulate_lgcp(const LatticeSpec& lattice, const LgcpParams& params,
                                std::uint64_t true_field_seed, std::uint64_t obs_seed);

}  // namespace infmcmc

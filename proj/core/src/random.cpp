#include "infmcmc/random.hpp"

namespace infmcmc {

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x9e3779b9u};
  return std::mt19937_64(seq);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream)
    : engine_(seeded_engine(seed, stream)) {}

double RandomSource::normal() { return normal_(engine_); }

double RandomSource::uniform() { return uniform_(engine_); }

Eigen::VectorXd RandomSource::standard_normal(Eigen::Index n) {
  Eigen::VectorXd xi(n);
  for (Eigen::Index i = 0; i < n; ++i) xi[i] = normal_(engine_);
  return xi;
}

}  // namespace infmcmc

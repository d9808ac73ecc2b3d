#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>

namespace infmcmc {

/// One independent pseudo-random stream. Streams are addressed by
/// (seed, stream id) so that, for example, the proposal noise of a chain can
/// be replayed bit-for-bit across kernels regardless of how many uniforms
/// the accept/reject step consumed.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0);

  double normal();
  /// Uniform on [0, 1).
  double uniform();
  Eigen::VectorXd standard_normal(Eigen::Index n);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Stream ids used by the samplers and the harness.
enum class Stream : std::uint64_t {
  kProposalNoise = 1,
  kAccept = 2,
  kHyperProposal = 3,
  kHyperAccept = 4,
  kInitialState = 5,
};

/// The streams one chain owns: xi for proposals, uniforms for accept/reject.
struct ChainRandom {
  RandomSource noise;
  RandomSource accept;

  explicit ChainRandom(std::uint64_t seed)
      : noise(seed, static_cast<std::uint64_t>(Stream::kProposalNoise)),
        accept(seed, static_cast<std::uint64_t>(Stream::kAccept)) {}
};

}  // namespace infmcmc

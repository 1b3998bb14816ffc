#pragma once

#include <cstdint>

namespace snsim {

// Deterministic 64-bit generator (splitmix64 core). All randomness in the
// project flows through this class so that runs are reproducible across
// platforms and standard-library versions; none of the std:: distribution
// templates are used because their output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  // Uniform integer in [0, n); n must be >= 1. Rejection-sampled, unbiased.
  std::uint64_t below(std::uint64_t n);

  // Fair coin.
  bool coin() { return (next_u64() >> 63) != 0; }

  // -1 or +1 with equal probability.
  int sign() { return coin() ? 1 : -1; }

 private:
  std::uint64_t state_;
};

// Stream tags for deriving independent sub-seeds from one master seed.
// A sub-seed is derive_seed(master, stream, counter); the scheme is part of
// the reproducibility contract and is documented in the README.
inline constexpr std::uint64_t kStreamFeatureSynthesis = 1;
inline constexpr std::uint64_t kStreamOptimizer = 2;
inline constexpr std::uint64_t kStreamEnsemble = 3;
inline constexpr std::uint64_t kStreamEnsembleSample = 4;

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t counter = 0);

}  // namespace snsim

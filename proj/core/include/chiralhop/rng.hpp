#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace chiralhop {

// Deterministic random stream keyed by (seed, stream). Streams derived from
// the same seed but different stream ids are independent, so Monte Carlo
// shots can run on any number of workers and still reproduce bit-for-bit.
// Gaussian and Bernoulli draws are generated from raw 64-bit words with fixed
// algorithms (no std::*_distribution, whose output is implementation
// defined).
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  // Uniform double in [0, 1) with 53 random bits.
  double uniform();

  // Standard normal via the Box-Muller transform; consumes exactly two
  // uniforms per call.
  double normal();

  bool bernoulli(double p);

  // Index sampled proportionally to the (nonnegative) weights.
  int sample_discrete(std::span<const double> weights);

 private:
  std::mt19937_64 engine_;
};

}  // namespace chiralhop

#include "chiralhop/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chiralhop {

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream * 0xda942042e4dd58b5ULL + 1))) {}

double RngStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log1p(-u1));  // u1 in [0,1) keeps the log finite
  return r * std::cos(2.0 * std::numbers::pi * u2);
}

bool RngStream::bernoulli(double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("bernoulli: p outside [0, 1]");
  if (p == 0.0) return false;
  return uniform() < p;
}

int RngStream::sample_discrete(std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  if (!(total > 0.0)) throw std::invalid_argument("sample_discrete: nonpositive total weight");
  double x = uniform() * total;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    x -= weights[k];
    if (x < 0.0) return static_cast<int>(k);
  }
  return static_cast<int>(weights.size()) - 1;
}

}  // namespace chiralhop

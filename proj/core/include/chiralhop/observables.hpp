#pragma once

#include <array>
#include <span>
#include <vector>

#include "chiralhop/geometry.hpp"
#include "chiralhop/types.hpp"

namespace chiralhop {

// Probabilities of the 2^n classical detection patterns. Detection only
// distinguishes the ground level from the two excited levels, so plus and
// minus both read as 1. Pattern index: bit of site 0 is the most significant.
struct PatternDistribution {
  int n_sites = 0;
  std::vector<double> prob;  // size 2^n, sums to 1
};

// psi lives on the three-level basis of n sites.
PatternDistribution detection_patterns(const Vector& psi, int n_sites);

// Probability-weighted mean position over the given per-site weights.
// Throws when all weights vanish.
std::array<double, 2> center_of_mass(std::span<const double> site_probs,
                                     const SiteLayout& layout);

// (p_first - p_second) / (p_first + p_second); throws on a zero denominator.
double imbalance(double p_first, double p_second);

enum class WindowKind { Hann, Rectangular };

struct SpectralPeak {
  bool found = false;
  double freq_mhz = 0.0;
  double power = 0.0;
};

// Dominant nonzero frequency of a uniformly sampled series (plain
// periodogram; the DC bin is excluded). Needs at least 64 samples. A series
// with vanishing variance reports found = false.
SpectralPeak residual_frequency(std::span<const double> series, double dt_us,
                                WindowKind window = WindowKind::Hann);

}  // namespace chiralhop

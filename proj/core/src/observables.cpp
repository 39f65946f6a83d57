#include "chiralhop/observables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "chiralhop/basis.hpp"

namespace chiralhop {

PatternDistribution detection_patterns(const Vector& psi, int n_sites) {
  const long dim = basis_dimension(n_sites, ModelKind::VStructure);
  if (psi.size() != dim)
    throw std::invalid_argument("detection_patterns: state dimension mismatch");
  PatternDistribution out;
  out.n_sites = n_sites;
  out.prob.assign(1u << n_sites, 0.0);
  for (long i = 0; i < dim; ++i) {
    const std::uint32_t pat = pattern_of(i, n_sites, ModelKind::VStructure);
    out.prob[pat] += std::norm(psi(i));
  }
  for (double& p : out.prob) p = std::min(std::max(p, 0.0), 1.0);  // strip rounding overshoot
  return out;
}

std::array<double, 2> center_of_mass(std::span<const double> site_probs,
                                     const SiteLayout& layout) {
  if (static_cast<int>(site_probs.size()) != layout.n_sites())
    throw std::invalid_argument("center_of_mass: weight count mismatch");
  double total = 0.0, x = 0.0, y = 0.0;
  for (std::size_t s = 0; s < site_probs.size(); ++s) {
    total += site_probs[s];
    x += site_probs[s] * layout.pos_um[s][0];
    y += site_probs[s] * layout.pos_um[s][1];
  }
  if (!(total > 0.0))
    throw std::invalid_argument("center_of_mass: all weights vanish");
  return {x / total, y / total};
}

double imbalance(double p_first, double p_second) {
  const double den = p_first + p_second;
  if (!(den > 0.0)) throw std::invalid_argument("imbalance: zero denominator");
  return (p_first - p_second) / den;
}

SpectralPeak residual_frequency(std::span<const double> series, double dt_us,
                                WindowKind window) {
  const std::size_t n = series.size();
  if (n < 64) throw std::invalid_argument("residual_frequency: need at least 64 samples");
  if (!(dt_us > 0.0)) throw std::invalid_argument("residual_frequency: dt must be positive");

  double mean = 0.0;
  for (double v : series) mean += v;
  mean /= static_cast<double>(n);

  std::vector<double> x(n);
  double variance = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double win = 1.0;
    if (window == WindowKind::Hann)
      win = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) /
                                 static_cast<double>(n - 1));
    x[k] = (series[k] - mean) * win;
    variance += (series[k] - mean) * (series[k] - mean);
  }
  SpectralPeak peak;
  if (variance / static_cast<double>(n) < 1e-24) return peak;  // flat series, no peak

  // direct DFT; series in this project are short enough that O(n^2) is fine
  const std::size_t n_bins = n / 2;
  for (std::size_t k = 1; k <= n_bins; ++k) {
    double re = 0.0, im = 0.0;
    const double omega = 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double a = omega * static_cast<double>(j);
      re += x[j] * std::cos(a);
      im -= x[j] * std::sin(a);
    }
    const double p = re * re + im * im;
    if (p > peak.power) {
      peak.power = p;
      peak.freq_mhz = static_cast<double>(k) / (static_cast<double>(n) * dt_us);
      peak.found = true;
    }
  }
  return peak;
}

}  // namespace chiralhop

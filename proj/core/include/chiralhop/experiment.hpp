#pragma once

#include <cstdint>
#include <vector>

#include "chiralhop/geometry.hpp"
#include "chiralhop/model.hpp"
#include "chiralhop/observables.hpp"
#include "chiralhop/rng.hpp"

namespace chiralhop {

// What happens to a site whose local pi-pulse fails: Ground leaves the atom
// in the ground level (it keeps interacting), Lost removes it from the
// dynamics and reads it out as excited.
enum class PrepLeakageMode { Ground, Lost };

struct NoiseModel {
  double vacancy_p = 0.0;
  double sigma_pos_um = 0.0;
  double eps_rydberg_as_ground = 0.0;  // excited atom wrongly recaptured
  double eps_ground_as_rydberg = 0.0;  // ground atom wrongly lost
  double prep_leakage = 0.0;
  PrepLeakageMode prep_leakage_mode = PrepLeakageMode::Ground;
  int n_samples = 500;
  std::uint64_t seed = 1;
  double two_excitation_scale = 1.0;
};

// True when every stochastic channel is off; the Monte Carlo runner then
// returns the exact per-time distribution (all shots would be identical).
bool noise_is_zero(const NoiseModel& noise);

struct ExperimentConfig {
  SiteLayout layout;
  VModelParams params;
  std::vector<int> initial_sites;  // 0-based sites prepared in the minus level
  std::vector<double> times_us;
  NoiseModel noise;
  bool vdw_enabled = false;
  double vdw_shift_mhz = 0.07;
  int n_threads = 0;  // 0 = hardware concurrency
};

// Classical randomness of one shot plus the prepared reduced state. Vacant
// sites (and Lost-mode preparation failures) are removed from the
// interacting system; their detection bits are forced to 1.
struct ShotPreparation {
  SiteLayout layout;                  // jittered positions
  std::vector<std::uint8_t> vacant;   // per full-layout site
  std::vector<std::uint8_t> lost;     // per full-layout site (Lost-mode failures)
  std::vector<int> present_sites;     // full-layout indices, ascending
  std::vector<std::uint8_t> prepared; // per present site: 1 if it carries a minus
  int failed_preps = 0;
};
ShotPreparation prepare_initial(const ExperimentConfig& config, RngStream& rng);

// Product state on the reduced basis of the present sites.
Vector reduced_initial_state(const ShotPreparation& prep);

// Independent detection bit flips: 1 -> 0 with eps_rydberg_as_ground and
// 0 -> 1 with eps_ground_as_rydberg. Site 0 is the most significant bit; one
// draw is consumed per site, most significant first.
std::uint32_t detect(std::uint32_t pattern, int n_sites, const NoiseModel& noise,
                     RngStream& rng);

struct MeasuredSeries {
  int n_sites = 0;
  std::vector<double> times_us;
  std::vector<std::vector<double>> mean;  // [time][pattern]
  std::vector<std::vector<double>> sem;   // [time][pattern]
  std::vector<double> xbar_um, ybar_um;   // from the three one-excitation patterns
  int n_samples = 0;
  int aborted = 0;
  long long vacancy_draws = 0;
  long long vacancies = 0;
  long long shots_with_vacancy = 0;
};

// Exact noise-free pipeline: one Hamiltonian, one propagation, exact pattern
// probabilities.
MeasuredSeries run_ideal(const ExperimentConfig& config);

// Appendix-style Monte Carlo: per shot jitter -> vacancies -> preparation ->
// evolution -> one sampled detection pattern per time point -> detection
// errors. Deterministic for a fixed seed and independent of the worker
// count; shots with a failed propagation are dropped and counted in
// `aborted`. With a fully zero noise model this reduces to run_ideal.
MeasuredSeries run_monte_carlo(const ExperimentConfig& config);

}  // namespace chiralhop

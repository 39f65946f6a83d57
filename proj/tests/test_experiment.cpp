#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "chiralhop/csv.hpp"
#include "chiralhop/experiment.hpp"

using namespace chiralhop;

namespace {
ExperimentConfig reference_config() {
  ExperimentConfig cfg;
  cfg.layout = equilateral(11.0);
  cfg.params = VModelParams{1.5, 0.55, 2.7, -16.0, +1};
  cfg.initial_sites = {0};
  for (double t = 0.0; t <= 1.5 + 1e-9; t += 0.02) cfg.times_us.push_back(t);
  return cfg;
}

NoiseModel reference_noise() {
  NoiseModel noise;
  noise.vacancy_p = 0.17;
  noise.sigma_pos_um = 0.2;
  noise.eps_rydberg_as_ground = 0.05;
  noise.eps_ground_as_rydberg = 0.05;
  noise.prep_leakage = 0.05;
  noise.n_samples = 500;
  noise.seed = 42;
  return noise;
}
}  // namespace

TEST_CASE("noise-free preparation is exact") {
  ExperimentConfig cfg = reference_config();
  RngStream rng(cfg.noise.seed, 0);
  const ShotPreparation prep = prepare_initial(cfg, rng);
  CHECK(prep.present_sites.size() == 3);
  CHECK(prep.failed_preps == 0);
  const Vector psi = reduced_initial_state(prep);
  REQUIRE(psi.size() == 27);
  CHECK(psi(9) == Complex(1.0, 0.0));  // |-00>
}

TEST_CASE("vacancy fraction matches the binomial oracle") {
  ExperimentConfig cfg = reference_config();
  cfg.noise.vacancy_p = 0.17;
  const int n = 10000;
  int with_vacancy = 0;
  for (int k = 0; k < n; ++k) {
    RngStream rng(123, static_cast<std::uint64_t>(k));
    const ShotPreparation prep = prepare_initial(cfg, rng);
    if (prep.present_sites.size() < 3) ++with_vacancy;
  }
  const double expected = 1.0 - std::pow(0.83, 3);  // 0.428
  CHECK(static_cast<double>(with_vacancy) / n == doctest::Approx(expected).epsilon(0.05));
}

TEST_CASE("independent preparation failures") {
  ExperimentConfig cfg = reference_config();
  cfg.initial_sites = {1, 2};
  cfg.noise.prep_leakage = 0.05;
  const int n = 20000;
  int both = 0;
  for (int k = 0; k < n; ++k) {
    RngStream rng(321, static_cast<std::uint64_t>(k));
    const ShotPreparation prep = prepare_initial(cfg, rng);
    int prepared = 0;
    for (std::uint8_t c : prep.prepared) prepared += c;
    if (prepared == 2) ++both;
  }
  CHECK(static_cast<double>(both) / n == doctest::Approx(0.9025).epsilon(0.02));
}

TEST_CASE("detection flips") {
  NoiseModel noise;
  RngStream rng(1, 1);
  CHECK(detect(0b100, 3, noise, rng) == 0b100);  // zero error is the identity

  noise.eps_rydberg_as_ground = 0.05;
  noise.eps_ground_as_rydberg = 0.05;
  const int n = 100000;
  int to_110 = 0;
  long long excited_from_empty = 0;
  for (int k = 0; k < n; ++k) {
    RngStream r1(99, static_cast<std::uint64_t>(k));
    if (detect(0b100, 3, noise, r1) == 0b110) ++to_110;
    RngStream r2(98, static_cast<std::uint64_t>(k));
    const std::uint32_t noisy = detect(0b000, 3, noise, r2);
    excited_from_empty += __builtin_popcount(noisy);
  }
  CHECK(static_cast<double>(to_110) / n == doctest::Approx(0.95 * 0.05 * 0.95).epsilon(0.05));
  CHECK(static_cast<double>(excited_from_empty) / n == doctest::Approx(0.15).epsilon(0.04));
}

TEST_CASE("zero noise reproduces the ideal pipeline for any seed") {
  ExperimentConfig cfg = reference_config();
  cfg.noise.n_samples = 1;
  cfg.noise.seed = 7;
  const MeasuredSeries mc = run_monte_carlo(cfg);
  cfg.noise.seed = 991;  // a different seed must not matter
  const MeasuredSeries mc2 = run_monte_carlo(cfg);
  const MeasuredSeries ideal = run_ideal(cfg);
  for (std::size_t i = 0; i < ideal.times_us.size(); ++i)
    for (std::size_t p = 0; p < 8; ++p) {
      CHECK(mc.mean[i][p] == ideal.mean[i][p]);
      CHECK(mc2.mean[i][p] == ideal.mean[i][p]);
      CHECK(mc.sem[i][p] == 0.0);
    }
}

TEST_CASE("Monte Carlo is deterministic and schedule independent") {
  ExperimentConfig cfg = reference_config();
  cfg.times_us.clear();
  for (double t = 0.0; t <= 0.5 + 1e-9; t += 0.05) cfg.times_us.push_back(t);
  cfg.noise = reference_noise();
  cfg.noise.n_samples = 200;

  cfg.n_threads = 1;
  const MeasuredSeries a = run_monte_carlo(cfg);
  const MeasuredSeries b = run_monte_carlo(cfg);
  cfg.n_threads = 4;
  const MeasuredSeries c = run_monte_carlo(cfg);
  for (std::size_t i = 0; i < a.times_us.size(); ++i)
    for (std::size_t p = 0; p < 8; ++p) {
      CHECK(a.mean[i][p] == b.mean[i][p]);
      CHECK(a.mean[i][p] == c.mean[i][p]);
      CHECK(a.sem[i][p] == c.sem[i][p]);
    }
  CHECK(a.vacancies == c.vacancies);
  CHECK(a.aborted == 0);
}

TEST_CASE("standard errors shrink as the sample count grows") {
  ExperimentConfig cfg = reference_config();
  cfg.times_us = {0.2, 0.4};
  cfg.noise = reference_noise();

  auto mean_sem = [&cfg](int n_samples) {
    cfg.noise.n_samples = n_samples;
    const MeasuredSeries s = run_monte_carlo(cfg);
    double total = 0.0;
    int count = 0;
    for (std::size_t i = 0; i < s.times_us.size(); ++i)
      for (std::size_t p : {4u, 2u, 1u}) {
        total += s.sem[i][p];
        ++count;
      }
    return total / count;
  };
  const double ratio = mean_sem(250) / mean_sem(1000);
  CHECK(ratio > 1.6);
  CHECK(ratio < 2.4);
}

TEST_CASE("reported pattern probabilities stay below one with noise") {
  ExperimentConfig cfg = reference_config();
  cfg.times_us = {0.0, 0.3, 0.6};
  cfg.noise = reference_noise();
  const MeasuredSeries s = run_monte_carlo(cfg);
  for (std::size_t i = 0; i < s.times_us.size(); ++i) {
    const double three = s.mean[i][4] + s.mean[i][2] + s.mean[i][1];
    CHECK(three <= 1.0 + 1e-12);
    CHECK(three < 0.95);  // vacancies and detection errors leak weight out
  }
  // vacancy statistics propagate to the report
  CHECK(s.vacancy_draws == 3LL * 500LL);
  CHECK(s.vacancies > 0);
  CHECK(s.shots_with_vacancy > 0);
}

TEST_CASE("position jitter damps the oscillations; the ideal envelope does not grow") {
  ExperimentConfig cfg = reference_config();
  cfg.times_us.clear();
  for (double t = 0.0; t <= 1.5 + 1e-9; t += 0.01) cfg.times_us.push_back(t);

  auto peak_to_peak = [&](const MeasuredSeries& s, double lo, double hi) {
    double mn = 1.0, mx = 0.0;
    for (std::size_t i = 0; i < s.times_us.size(); ++i) {
      if (s.times_us[i] < lo || s.times_us[i] > hi) continue;
      mn = std::min(mn, s.mean[i][4]);
      mx = std::max(mx, s.mean[i][4]);
    }
    return mx - mn;
  };

  const MeasuredSeries ideal = run_ideal(cfg);
  const double pp_early_ideal = peak_to_peak(ideal, 0.3, 0.7);
  const double pp_late_ideal = peak_to_peak(ideal, 1.1, 1.5);
  CHECK(pp_late_ideal <= pp_early_ideal * 1.02);

  cfg.noise.sigma_pos_um = 0.2;
  cfg.noise.n_samples = 1500;
  cfg.noise.seed = 5;
  const MeasuredSeries noisy = run_monte_carlo(cfg);
  const double pp_early = peak_to_peak(noisy, 0.3, 0.7);
  const double pp_late = peak_to_peak(noisy, 1.1, 1.5);
  CHECK(pp_late < pp_early - 0.1);
}

TEST_CASE("two-excitation reporting scale") {
  ExperimentConfig cfg = reference_config();
  cfg.initial_sites = {1, 2};
  cfg.times_us = {0.0, 0.2};
  const MeasuredSeries plain = run_ideal(cfg);
  cfg.noise.two_excitation_scale = 0.8;
  const MeasuredSeries scaled = run_ideal(cfg);
  for (std::size_t i = 0; i < plain.times_us.size(); ++i) {
    CHECK(scaled.mean[i][0] == plain.mean[i][0]);  // vacuum pattern untouched
    for (std::size_t p = 1; p < 8; ++p)
      CHECK(scaled.mean[i][p] == doctest::Approx(0.8 * plain.mean[i][p]).epsilon(1e-14));
  }
}

TEST_CASE("lost-mode preparation failures read as excited and stop interacting") {
  ExperimentConfig cfg = reference_config();
  cfg.times_us = {0.0};
  cfg.noise.prep_leakage = 1.0;  // every driven pulse fails
  cfg.noise.prep_leakage_mode = PrepLeakageMode::Lost;
  cfg.noise.n_samples = 50;
  const MeasuredSeries s = run_monte_carlo(cfg);
  CHECK(s.mean[0][0b100] == doctest::Approx(1.0));  // site 1 lost, others ground

  cfg.noise.prep_leakage_mode = PrepLeakageMode::Ground;
  const MeasuredSeries g = run_monte_carlo(cfg);
  CHECK(g.mean[0][0b000] == doctest::Approx(1.0));  // failed pulse leaves |000>
}

TEST_CASE("chirality ordering survives the noisy pipeline and reverses with the field") {
  ExperimentConfig cfg = reference_config();
  cfg.times_us.clear();
  for (double t = 0.02; t <= 0.56 + 1e-9; t += 0.02) cfg.times_us.push_back(t);
  cfg.noise = reference_noise();
  cfg.noise.n_samples = 600;

  auto first_peaks = [&cfg]() {
    const MeasuredSeries s = run_monte_carlo(cfg);
    double best2 = 0.0, best3 = 0.0, t2 = 0.0, t3 = 0.0;
    for (std::size_t i = 0; i < s.times_us.size(); ++i) {
      if (s.mean[i][0b010] > best2) {
        best2 = s.mean[i][0b010];
        t2 = s.times_us[i];
      }
      if (s.mean[i][0b001] > best3) {
        best3 = s.mean[i][0b001];
        t3 = s.times_us[i];
      }
    }
    return std::pair{t2, t3};
  };

  const auto [t2_fwd, t3_fwd] = first_peaks();
  CHECK(t3_fwd < t2_fwd);  // 1 -> 3 -> 2 -> 1

  cfg.params.field_sign = -1;
  const auto [t2_rev, t3_rev] = first_peaks();
  CHECK(t2_rev < t3_rev);  // 1 -> 2 -> 3 -> 1
}

TEST_CASE("invalid experiment configurations are rejected") {
  ExperimentConfig cfg = reference_config();
  cfg.initial_sites = {0, 0};
  CHECK_THROWS_AS(run_ideal(cfg), std::invalid_argument);
  cfg = reference_config();
  cfg.initial_sites = {5};
  CHECK_THROWS_AS(run_ideal(cfg), std::invalid_argument);
  cfg = reference_config();
  cfg.noise.vacancy_p = 1.5;
  CHECK_THROWS_AS(run_monte_carlo(cfg), std::invalid_argument);
  cfg = reference_config();
  cfg.times_us.clear();
  CHECK_THROWS_AS(run_ideal(cfg), std::invalid_argument);
}

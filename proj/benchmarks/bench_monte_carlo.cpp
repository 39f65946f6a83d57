#include <benchmark/benchmark.h>

#include "chiralhop/experiment.hpp"

using namespace chiralhop;

namespace {
ExperimentConfig noisy_config(int n_samples) {
  ExperimentConfig cfg;
  cfg.layout = equilateral(11.0);
  cfg.params = VModelParams{1.5, 0.55, 2.7, -16.0, +1};
  cfg.initial_sites = {0};
  for (double t = 0.0; t <= 1.5 + 1e-9; t += 0.05) cfg.times_us.push_back(t);
  cfg.noise.vacancy_p = 0.17;
  cfg.noise.sigma_pos_um = 0.2;
  cfg.noise.eps_rydberg_as_ground = 0.05;
  cfg.noise.eps_ground_as_rydberg = 0.05;
  cfg.noise.prep_leakage = 0.05;
  cfg.noise.n_samples = n_samples;
  cfg.noise.seed = 1;
  cfg.n_threads = 1;
  return cfg;
}
}  // namespace

static void BM_MonteCarlo(benchmark::State& state) {
  const ExperimentConfig cfg = noisy_config(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_monte_carlo(cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(50)->Arg(500)->Unit(benchmark::kMillisecond);

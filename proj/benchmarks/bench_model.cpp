#include <benchmark/benchmark.h>

#include "chiralhop/model.hpp"

using namespace chiralhop;

static void BM_FullVHamiltonian3(benchmark::State& state) {
  const SiteLayout layout = equilateral(11.0);
  const VModelParams params{1.5, 0.55, 2.7, -16.0, +1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_v_hamiltonian(layout, params));
  }
}
BENCHMARK(BM_FullVHamiltonian3);

static void BM_FullVHamiltonian4(benchmark::State& state) {
  const SiteLayout layout = square(11.0);
  const VModelParams params{1.5, 0.55, 2.7, -16.0, +1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_v_hamiltonian(layout, params));
  }
}
BENCHMARK(BM_FullVHamiltonian4);

static void BM_ManyBodyEffective(benchmark::State& state) {
  const EffectiveParams eff{0.872174, 0.469469, -0.369392};
  for (auto _ : state) {
    benchmark::DoNotOptimize(many_body_effective(eff));
  }
}
BENCHMARK(BM_ManyBodyEffective);

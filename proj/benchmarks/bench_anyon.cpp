#include <benchmark/benchmark.h>

#include "chiralhop/anyon.hpp"

using namespace chiralhop;

static void BM_AnyonTransform(benchmark::State& state) {
  const ModeAlgebra base = build_hardcore_modes();
  for (auto _ : state) {
    benchmark::DoNotOptimize(anyon_transform(base, 0.5235987755982988));
  }
}
BENCHMARK(BM_AnyonTransform);

static void BM_VerifyAlgebra(benchmark::State& state) {
  const ModeAlgebra alg = anyon_transform(build_hardcore_modes(), 0.5235987755982988);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_algebra(alg));
  }
}
BENCHMARK(BM_VerifyAlgebra);

static void BM_HamiltonianEquivalence(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hamiltonian_equivalence(0.872174, -0.369392, 0.5235987755982988));
  }
}
BENCHMARK(BM_HamiltonianEquivalence);

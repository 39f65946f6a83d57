#include <benchmark/benchmark.h>

#include "chiralhop/evolve.hpp"
#include "chiralhop/model.hpp"

using namespace chiralhop;

namespace {
Vector localized(long dim, long k) {
  Vector psi = Vector::Zero(dim);
  psi(k) = Complex(1.0, 0.0);
  return psi;
}
}  // namespace

static void BM_Eigendecomposition27(benchmark::State& state) {
  const Matrix H = full_v_hamiltonian(equilateral(11.0), VModelParams{});
  for (auto _ : state) {
    Propagator prop(H);
    benchmark::DoNotOptimize(prop.eigenvalues());
  }
}
BENCHMARK(BM_Eigendecomposition27);

static void BM_Evolve151Times(benchmark::State& state) {
  const Matrix H = full_v_hamiltonian(equilateral(11.0), VModelParams{});
  const Propagator prop(H);
  const Vector psi0 = localized(27, 9);
  std::vector<double> times;
  for (double t = 0.0; t <= 1.5 + 1e-9; t += 0.01) times.push_back(t);
  for (auto _ : state) {
    benchmark::DoNotOptimize(prop.evolve(psi0, times));
  }
}
BENCHMARK(BM_Evolve151Times);

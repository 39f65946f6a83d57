#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "chiralhop/observables.hpp"
#include "chiralhop/rng.hpp"

using namespace chiralhop;

namespace {
Vector basis_vec(long dim, long k) {
  Vector psi = Vector::Zero(dim);
  psi(k) = Complex(1.0, 0.0);
  return psi;
}
}  // namespace

TEST_CASE("detection cannot distinguish the two excited levels") {
  // |-00>
  CHECK(detection_patterns(basis_vec(27, 9), 3).prob[0b100] == doctest::Approx(1.0));

  // (|-00> + |+00>)/sqrt2 still reads 100 deterministically
  Vector psi = Vector::Zero(27);
  psi(9) = Complex(1.0 / std::sqrt(2.0), 0.0);
  psi(18) = Complex(1.0 / std::sqrt(2.0), 0.0);
  const auto mixed = detection_patterns(psi, 3);
  CHECK(mixed.prob[0b100] == doctest::Approx(1.0).epsilon(1e-14));

  // (|-00> + |0-0>)/sqrt2 splits between two patterns
  Vector split = Vector::Zero(27);
  split(9) = Complex(1.0 / std::sqrt(2.0), 0.0);
  split(3) = Complex(1.0 / std::sqrt(2.0), 0.0);
  const auto two = detection_patterns(split, 3);
  CHECK(two.prob[0b100] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(two.prob[0b010] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("pattern probabilities sum to one") {
  RngStream rng(5, 1);
  for (int rep = 0; rep < 10; ++rep) {
    Vector psi(27);
    for (int i = 0; i < 27; ++i) psi(i) = Complex(rng.normal(), rng.normal());
    psi /= psi.norm();
    const auto dist = detection_patterns(psi, 3);
    double total = 0.0;
    for (double p : dist.prob) {
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      total += p;
    }
    CHECK(std::abs(total - 1.0) < 1e-10);
  }
}

TEST_CASE("center of mass") {
  const SiteLayout l = equilateral(11.0);
  {
    const double p[3] = {1.0, 0.0, 0.0};
    const auto com = center_of_mass(p, l);
    CHECK(com[0] == doctest::Approx(l.pos_um[0][0]));
    CHECK(com[1] == doctest::Approx(l.pos_um[0][1]));
  }
  {
    const double p[3] = {1.0 / 3, 1.0 / 3, 1.0 / 3};
    const auto com = center_of_mass(p, l);
    CHECK(std::abs(com[0]) < 1e-12);
    CHECK(std::abs(com[1]) < 1e-12);
  }
  {
    const double p[3] = {0.5, 0.25, 0.25};
    const auto com = center_of_mass(p, l);
    double ex = 0.0, ey = 0.0;
    for (int s = 0; s < 3; ++s) {
      ex += p[s] * l.pos_um[s][0];
      ey += p[s] * l.pos_um[s][1];
    }
    CHECK(com[0] == doctest::Approx(ex).epsilon(1e-14));
    CHECK(com[1] == doctest::Approx(ey).epsilon(1e-14));
  }
  const double zeros[3] = {0.0, 0.0, 0.0};
  CHECK_THROWS_AS(center_of_mass(zeros, l), std::invalid_argument);
}

TEST_CASE("imbalance") {
  CHECK(imbalance(0.6, 0.2) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(imbalance(0.37, 0.37) == 0.0);
  RngStream rng(6, 2);
  for (int rep = 0; rep < 20; ++rep) {
    const double a = rng.uniform() + 1e-6, b = rng.uniform() + 1e-6;
    CHECK(imbalance(a, b) == doctest::Approx(-imbalance(b, a)).epsilon(1e-12));
    CHECK(std::abs(imbalance(a, b)) <= 1.0);
  }
  CHECK_THROWS_AS(imbalance(0.0, 0.0), std::invalid_argument);
}

TEST_CASE("residual frequency peak") {
  const double dt = 0.01;
  std::vector<double> series(151);

  // flat series: no peak
  for (auto& v : series) v = 0.42;
  CHECK_FALSE(residual_frequency(series, dt).found);

  // 16 MHz cosine lands within one bin
  for (std::size_t k = 0; k < series.size(); ++k)
    series[k] = std::cos(2.0 * std::numbers::pi * 16.0 * dt * static_cast<double>(k));
  const SpectralPeak peak = residual_frequency(series, dt);
  REQUIRE(peak.found);
  const double bin = 1.0 / (dt * static_cast<double>(series.size()));
  CHECK(std::abs(peak.freq_mhz - 16.0) <= bin);

  std::vector<double> tiny(10, 0.0);
  CHECK_THROWS_AS(residual_frequency(tiny, dt), std::invalid_argument);
}

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "chiralhop/geometry.hpp"

using namespace chiralhop;

namespace {
constexpr double kPi = std::numbers::pi;

double dist(const SiteLayout& l, int i, int j) { return bond(l, i, j).r_um; }
}  // namespace

TEST_CASE("equilateral triangle") {
  const SiteLayout l = equilateral(11.0);
  REQUIRE(l.n_sites() == 3);
  for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {0, 2}})
    CHECK(dist(l, i, j) == doctest::Approx(11.0).epsilon(1e-12));

  // centroid at the origin
  double cx = 0, cy = 0;
  for (const auto& p : l.pos_um) {
    cx += p[0];
    cy += p[1];
  }
  CHECK(std::abs(cx) < 1e-12);
  CHECK(std::abs(cy) < 1e-12);

  // counterclockwise indexing
  const double cross = (l.pos_um[1][0] - l.pos_um[0][0]) * (l.pos_um[2][1] - l.pos_um[1][1]) -
                       (l.pos_um[1][1] - l.pos_um[0][1]) * (l.pos_um[2][0] - l.pos_um[1][0]);
  CHECK(cross > 0.0);

  // the bond-angle mismatch between the 3->2 and 1->3 directions is 2 pi / 3
  // in magnitude (its sign depends on the indexing orientation)
  const double diff = wrap_angle(bond(l, 2, 1).phi_rad - bond(l, 0, 2).phi_rad);
  CHECK(std::abs(std::abs(diff) - 2.0 * kPi / 3.0) < 1e-12);
}

TEST_CASE("isosceles base length follows 2 r cos(gamma/2)") {
  const SiteLayout g0 = isosceles(0.0, 11.0);
  CHECK(dist(g0, 0, 2) == doctest::Approx(22.0).epsilon(1e-12));
  CHECK(dist(g0, 0, 1) == doctest::Approx(11.0).epsilon(1e-12));
  CHECK(dist(g0, 1, 2) == doctest::Approx(11.0).epsilon(1e-12));
  // collinear: the 1->3 and 1->2 directions coincide
  CHECK(std::abs(bond(g0, 0, 2).phi_rad - bond(g0, 0, 1).phi_rad) < 1e-12);

  const SiteLayout g90 = isosceles(90.0, 11.0);
  CHECK(dist(g90, 0, 2) == doctest::Approx(15.556349186104047).epsilon(1e-12));

  const SiteLayout g120 = isosceles(120.0, 11.0);
  const SiteLayout eq = equilateral(11.0);
  for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {0, 2}})
    CHECK(std::abs(dist(g120, i, j) - dist(eq, i, j)) < 1e-9);
}

TEST_CASE("square and honeycomb plaquettes") {
  const SiteLayout sq = square(1.0);
  CHECK(dist(sq, 0, 1) == doctest::Approx(1.0));
  CHECK(dist(sq, 0, 2) == doctest::Approx(std::sqrt(2.0)));
  // nearest-bond directions advance by pi/2 around the plaquette
  for (int k = 0; k < 4; ++k) {
    const double a = bond(sq, k, (k + 1) % 4).phi_rad;
    const double b = bond(sq, (k + 1) % 4, (k + 2) % 4).phi_rad;
    CHECK(std::abs(wrap_angle(b - a - kPi / 2.0)) < 1e-12);
  }

  const SiteLayout hc = honeycomb(1.0);
  REQUIRE(hc.n_sites() == 6);
  CHECK(dist(hc, 0, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dist(hc, 0, 2) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(dist(hc, 0, 3) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("bond symmetry properties") {
  RngStream rng(3, 5);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<std::array<double, 2>> pos;
    for (int s = 0; s < 4; ++s) pos.push_back({20.0 * rng.uniform(), 20.0 * rng.uniform()});
    SiteLayout l;
    try {
      l = custom_layout(pos, 10.0);
    } catch (const std::invalid_argument&) {
      continue;  // coincident draw
    }
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        if (i == j) continue;
        const BondGeometry ij = bond(l, i, j), ji = bond(l, j, i);
        CHECK(ij.r_um == ji.r_um);
        CHECK(std::abs(wrap_angle(ji.phi_rad - ij.phi_rad - kPi)) < 1e-12);
      }
  }
  CHECK_THROWS_AS(bond(equilateral(11.0), 1, 1), std::invalid_argument);
}

TEST_CASE("jitter determinism and statistics") {
  const SiteLayout l = equilateral(11.0);
  {
    RngStream rng(1, 2);
    const SiteLayout same = jitter(l, 0.0, rng);
    for (int s = 0; s < 3; ++s) {
      CHECK(same.pos_um[s][0] == l.pos_um[s][0]);
      CHECK(same.pos_um[s][1] == l.pos_um[s][1]);
    }
  }
  {
    RngStream a(9, 4), b(9, 4);
    const SiteLayout ja = jitter(l, 0.2, a), jb = jitter(l, 0.2, b);
    for (int s = 0; s < 3; ++s) CHECK(ja.pos_um[s][0] == jb.pos_um[s][0]);
  }
  {
    double sum = 0.0, sum2 = 0.0;
    const int n = 10000;
    for (int k = 0; k < n; ++k) {
      RngStream rng(77, static_cast<std::uint64_t>(k));
      const double dx = jitter(l, 0.2, rng).pos_um[0][0] - l.pos_um[0][0];
      sum += dx;
      sum2 += dx * dx;
    }
    const double var = (sum2 - sum * sum / n) / (n - 1);
    CHECK(std::sqrt(var) == doctest::Approx(0.2).epsilon(0.05));
  }
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(equilateral(0.0), std::invalid_argument);
  CHECK_THROWS_AS(equilateral(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(isosceles(180.0, 11.0), std::invalid_argument);
  CHECK_THROWS_AS(isosceles(-1.0, 11.0), std::invalid_argument);
  CHECK_THROWS_AS(custom_layout({{0, 0}, {0, 0}}, 1.0), std::invalid_argument);
}

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "chiralhop/peierls.hpp"

using namespace chiralhop;

namespace {
const VModelParams kRef{1.5, 0.55, 2.7, -16.0, +1};
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("second-order triangle hop at the measured couplings") {
  const ComplexHop hop = triangle_hop(0.55, 2.7, -16.0);
  // golden values from tests/oracles/plaquette_oracle.py
  CHECK(hop.amplitude.real() == doctest::Approx(0.7778125).epsilon(1e-13));
  CHECK(hop.amplitude.imag() == doctest::Approx(0.3945828245992848).epsilon(1e-13));
  CHECK(hop.magnitude() == doctest::Approx(0.8721742318052055).epsilon(1e-13));
  CHECK(hop.phase() == doctest::Approx(0.46946905059560895).epsilon(1e-13));
  CHECK(3.0 * hop.phase() == doctest::Approx(1.4084071517868269).epsilon(1e-13));

  CHECK(triangle_hop(0.55, 0.0, -16.0).amplitude == Complex(0.55, 0.0));
  CHECK(triangle_hop(0.55, 0.0, -16.0).phase() == 0.0);
  CHECK(std::abs(triangle_hop(0.55, 2.7, -16000.0).phase()) < 0.001);
  CHECK_THROWS_AS(triangle_hop(0.55, 2.7, 0.0), std::invalid_argument);
}

TEST_CASE("fourth-order two-excitation hop") {
  const ComplexHop hop = two_excitation_hop(0.55, 2.7, -16.0);
  CHECK(hop.amplitude.real() == doctest::Approx(0.5564873168945313).epsilon(1e-13));
  CHECK(hop.amplitude.imag() == doctest::Approx(-0.011236362466128073).epsilon(1e-13));
  CHECK(std::abs(hop.phase()) == doctest::Approx(0.020188844338438178).epsilon(1e-12));
  CHECK(std::abs(hop.phase()) < 0.03);

  CHECK(two_excitation_hop(0.55, 0.0, -16.0).amplitude == Complex(0.55, 0.0));

  // the residual complex part is (w/mu)^2 of the single-excitation one
  const ComplexHop single = triangle_hop(0.55, 2.7, -16.0);
  const double ratio = std::abs(hop.amplitude.imag() / single.amplitude.imag());
  CHECK(ratio == doctest::Approx(std::pow(2.7 / 16.0, 2)).epsilon(1e-12));
}

TEST_CASE("delta follows from the hop and t_b") {
  const EffectiveParams eff = effective_params(triangle_hop(0.55, 2.7, -16.0), 0.55);
  CHECK(eff.delta == doctest::Approx(-0.3693920550007272).epsilon(1e-12));
}

TEST_CASE("isosceles bond couplings and flux") {
  const TriangleFluxes g0 = isosceles_fluxes(0.0, kRef);
  CHECK(g0.kappa == doctest::Approx(0.125).epsilon(1e-14));
  for (const Complex& amp : g0.bond_amplitudes) CHECK(std::abs(amp.imag()) < 1e-15);
  CHECK(std::abs(wrap_half_turn(g0.total_flux)) < 1e-12);  // 0 mod pi

  // the zero crossing of the flux mod pi sits between 70 and 80 degrees
  double prev = wrap_half_turn(isosceles_fluxes(70.0, kRef).total_flux);
  bool crossed = false;
  for (double g = 71.0; g <= 80.0; g += 1.0) {
    const double cur = wrap_half_turn(isosceles_fluxes(g, kRef).total_flux);
    if (prev * cur < 0.0 && std::abs(prev - cur) < 1.0) crossed = true;
    prev = cur;
  }
  CHECK(crossed);

  // close-to-linear flux over [0, 90]: monotone, small sag below the chord
  const double f0 = isosceles_fluxes(0.0, kRef).total_flux;
  const double f90 = isosceles_fluxes(90.0, kRef).total_flux;
  double last = f0;
  double worst_sag = 0.0;
  for (double g = 1.0; g <= 90.0; g += 1.0) {
    const double f = isosceles_fluxes(g, kRef).total_flux;
    CHECK(f < last);
    last = f;
    const double chord = f0 + (f90 - f0) * (g / 90.0);
    worst_sag = std::max(worst_sag, std::abs(f - chord));
  }
  CHECK(worst_sag < 0.2);

  // gamma = 120 recovers the equilateral flux magnitude
  const double flux120 = isosceles_fluxes(120.0, kRef).total_flux;
  const double flux_eq = 3.0 * triangle_hop(kRef.t_b, kRef.w, kRef.mu).phase();
  CHECK(std::abs(std::abs(flux120) - std::abs(wrap_angle(flux_eq))) < 1e-9);

  // without the spin-orbit channel every bond coupling is real
  VModelParams noflip = kRef;
  noflip.w = 0.0;
  for (double g : {0.0, 33.0, 75.0, 120.0})
    for (const Complex& amp : isosceles_fluxes(g, noflip).bond_amplitudes)
      CHECK(amp.imag() == 0.0);

  CHECK_THROWS_AS(isosceles_fluxes(-1.0, kRef), std::invalid_argument);
  VModelParams bad = kRef;
  bad.mu = 0.0;
  CHECK_THROWS_AS(isosceles_fluxes(30.0, bad), std::invalid_argument);
}

TEST_CASE("reversing the plaquette orientation negates the flux") {
  for (double g : {10.0, 45.0, 85.0, 120.0}) {
    const TriangleFluxes f = isosceles_fluxes(g, kRef);
    double reversed = 0.0;
    for (const Complex& amp : f.bond_amplitudes) reversed += std::arg(std::conj(amp));
    CHECK(std::abs(wrap_angle(reversed + f.total_flux)) < 1e-12);
  }
}

TEST_CASE("field reversal negates every flux") {
  VModelParams flipped = kRef;
  flipped.field_sign = -1;
  for (double g : {15.0, 40.0, 75.0}) {
    CHECK(std::abs(wrap_angle(isosceles_fluxes(g, kRef).total_flux +
                              isosceles_fluxes(g, flipped).total_flux)) < 1e-12);
  }
  CHECK(std::abs(wrap_angle(square_couplings(kRef).total_flux +
                            square_couplings(flipped).total_flux)) < 1e-12);
  CHECK(std::abs(wrap_angle(honeycomb_couplings(kRef).total_flux +
                            honeycomb_couplings(flipped).total_flux)) < 1e-12);
  CHECK(std::abs(honeycomb_couplings(kRef).alternating_flux +
                 honeycomb_couplings(flipped).alternating_flux) < 1e-12);
}

TEST_CASE("square plaquette couplings") {
  const SquareCouplings sq = square_couplings(kRef);
  CHECK(sq.nn.amplitude.real() == doctest::Approx(0.55).epsilon(1e-14));
  CHECK(sq.nn.amplitude.imag() == doctest::Approx(-0.32217552717812076).epsilon(1e-13));
  CHECK(sq.diagonal == doctest::Approx(1.1057043648263007).epsilon(1e-13));
  CHECK(sq.total_flux == doctest::Approx(wrap_angle(4.0 * sq.nn.phase())).epsilon(1e-13));

  VModelParams noflip = kRef;
  noflip.w = 0.0;
  const SquareCouplings real_case = square_couplings(noflip);
  CHECK(real_case.nn.phase() == 0.0);
  CHECK(real_case.diagonal == doctest::Approx(0.55 / std::pow(2.0, 1.5)).epsilon(1e-14));
}

TEST_CASE("honeycomb plaquette couplings") {
  const HoneycombCouplings hc = honeycomb_couplings(kRef);
  CHECK(hc.nn.amplitude.real() == doctest::Approx(0.4513542938501788).epsilon(1e-13));
  CHECK(hc.nn.amplitude.imag() == doctest::Approx(-0.170859375).epsilon(1e-13));
  CHECK(hc.nnn.amplitude.real() == doctest::Approx(0.3990506743514314).epsilon(1e-13));
  CHECK(hc.nnn.amplitude.imag() == doctest::Approx(-0.5078427094379686).epsilon(1e-13));
  CHECK(hc.third == doctest::Approx(0.41949028853269765).epsilon(1e-13));
  CHECK(hc.alternating_flux == doctest::Approx(0.5429110337736265).epsilon(1e-12));
  CHECK(hc.alternating_flux != 0.0);
  CHECK(hc.nn.magnitude() > 0.0);
  CHECK(hc.nnn.magnitude() > 0.0);
  CHECK(hc.third > 0.0);

  VModelParams noflip = kRef;
  noflip.w = 0.0;
  const HoneycombCouplings real_case = honeycomb_couplings(noflip);
  CHECK(real_case.nn.phase() == 0.0);
  CHECK(real_case.nnn.phase() == 0.0);
  CHECK(real_case.alternating_flux == 0.0);
  CHECK(real_case.third == doctest::Approx(0.55 / 8.0).epsilon(1e-14));
}

TEST_CASE("angle reduction helpers") {
  CHECK(wrap_angle(3.0 * kPi) == doctest::Approx(kPi));
  CHECK(wrap_angle(-kPi) == doctest::Approx(kPi));
  CHECK(wrap_half_turn(kPi) == doctest::Approx(0.0));
  CHECK(wrap_half_turn(kPi + 0.3) == doctest::Approx(0.3));
}

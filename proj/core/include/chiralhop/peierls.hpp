#pragma once

#include <array>

#include "chiralhop/model.hpp"
#include "chiralhop/types.hpp"

namespace chiralhop {

// Complex hopping amplitude t e^{i phi} in h*MHz.
struct ComplexHop {
  Complex amplitude{0.0, 0.0};

  double magnitude() const;
  double phase() const;  // in (-pi, pi]
};

// Second-order effective hop on the equilateral triangle:
// t e^{i phi} = t_b + e^{i 4 pi / 3} w^2 / mu, with signed mu.
ComplexHop triangle_hop(double t_b, double w, double mu);

// Fourth-order hop in the two-excitation sector:
// t e^{i phi} = t_b + (w^4 / mu^3) e^{-i 4 pi / 3}.
ComplexHop two_excitation_hop(double t_b, double w, double mu);

// Derived effective parameters for the many-body model: t, phi from the hop
// and delta = (t_b - t) / t.
EffectiveParams effective_params(const ComplexHop& hop, double t_b);

// Per-bond couplings and plaquette flux of the isosceles triangle with
// r12 = r23 = r_ref and opening angle gamma: t12 = t23 = t_b + kappa w^2
// e^{i gamma} / mu and t31 = kappa t_b + w^2 e^{-2 i gamma} / mu with
// kappa = 1 / (2 cos(gamma/2))^3. The flux is the sum of the three directed
// bond phases around 1 -> 2 -> 3 -> 1, reported mod 2 pi in (-pi, pi].
struct TriangleFluxes {
  double gamma_deg = 0.0;
  double kappa = 0.0;
  std::array<Complex, 3> bond_amplitudes{};  // t12, t23, t31
  std::array<double, 3> bond_phases{};
  double total_flux = 0.0;
};
TriangleFluxes isosceles_fluxes(double gamma_deg, const VModelParams& params);

// Square plaquette: nearest-neighbor hop t e^{i phi} = t_b + i w^2/(mu sqrt2),
// real diagonal coupling t' = t_b / 2^{3/2} - 2 w^2 / mu, homogeneous flux
// 4 phi.
struct SquareCouplings {
  ComplexHop nn;
  double diagonal = 0.0;
  double total_flux = 0.0;
};
SquareCouplings square_couplings(const VModelParams& params);

// Honeycomb plaquette: t e^{i phi} = t_b + 3 w^2/(4 sqrt3 mu) e^{i pi/3},
// t' e^{i phi'} = t_b / 3^{3/2} + 139 w^2/(108 mu) e^{2 i pi/3},
// t'' = t_b / 8 - 4 w^2 / (3 sqrt3 mu); homogeneous flux 6 phi plus the
// alternating flux Phi = phi - phi'.
struct HoneycombCouplings {
  ComplexHop nn;
  ComplexHop nnn;
  double third = 0.0;
  double alternating_flux = 0.0;
  double total_flux = 0.0;
};
HoneycombCouplings honeycomb_couplings(const VModelParams& params);

// Reduce an angle mod pi into (-pi/2, pi/2]; fluxes equal to 0 mod pi give
// symmetric propagation.
double wrap_half_turn(double a);

}  // namespace chiralhop

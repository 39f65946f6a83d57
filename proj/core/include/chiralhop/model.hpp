#pragma once

#include "chiralhop/basis.hpp"
#include "chiralhop/geometry.hpp"
#include "chiralhop/types.hpp"

namespace chiralhop {

// Energy scales of the three-level exchange model, quoted in h*MHz at the
// layout's reference distance. mu = E_plus - E_minus is signed; field_sign
// selects the orientation of the perpendicular magnetic field (+1 is the
// reference orientation, -1 conjugates every spin-orbit phase).
struct VModelParams {
  double t_a = 1.5;
  double t_b = 0.55;
  double w = 2.7;
  double mu = -16.0;
  int field_sign = +1;
};

// Parameters of the single-excitation effective description: hop magnitude t,
// Peierls phase phi, and the correlated-hopping ratio delta = (t_b - t)/t.
struct EffectiveParams {
  double t = 0.0;
  double phi = 0.0;
  double delta = 0.0;
};

// Dipolar 1/r^3 rescaling of a coupling quoted at r_ref.
double scale_coupling(double x_ref, double r_ref_um, double r_um);

// Full three-level exchange Hamiltonian on the 3^n basis. For each ordered
// site pair the excitation hops with amplitude -t_a (plus channel) or -t_b
// (minus channel), or flips its internal state: minus on i to plus on j
// carries w * exp(-2 i s phi_ij) with s = field_sign, and the reverse flip
// the conjugate phase. On-site terms are +mu/2 per plus and -mu/2 per minus.
// All couplings are distance-rescaled by 1/r^3. At most one excitation per
// site is built into the basis.
Matrix full_v_hamiltonian(const SiteLayout& layout, const VModelParams& params);

// Single-excitation ring with complex hopping: the hop i -> i+1 (cyclic,
// counterclockwise site indexing) carries amplitude -t e^{-i phi}, so a
// positive phi drives 1 -> 3 -> 2 -> 1 transfer, matching the full model for
// field_sign = +1. This is the convention realized by the perturbative limit
// of full_v_hamiltonian on a counterclockwise-indexed triangle.
Matrix effective_single_hamiltonian(double t, double phi, int n_sites = 3);

// Density-dependent generalization on the 3-site hard-core basis (dim 8):
// the hop i -> i+1 carries phase e^{-i phi} only when site i+2 is empty, and
// the real amplitude -t(1 + delta) = -t_b when it is occupied.
Matrix many_body_effective(const EffectiveParams& eff);

// Constant van der Waals shift v per excited pair, added to the diagonal.
Matrix add_vdw_shift(const Matrix& H, double v, int n_sites, ModelKind kind);

}  // namespace chiralhop

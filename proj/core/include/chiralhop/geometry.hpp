#pragma once

#include <array>
#include <vector>

#include "chiralhop/rng.hpp"

namespace chiralhop {

// Planar arrangement of sites. Coupling strengths are quoted at the
// reference distance r_ref and rescaled per bond as (r_ref / r)^3.
struct SiteLayout {
  std::vector<std::array<double, 2>> pos_um;
  double r_ref_um = 0.0;

  int n_sites() const { return static_cast<int>(pos_um.size()); }
};

struct BondGeometry {
  double r_um = 0.0;    // separation
  double phi_rad = 0.0; // polar angle of the vector from site i to site j, in (-pi, pi]
};

// Equilateral triangle with the centroid at the origin, sites indexed
// counterclockwise, r_ref = side.
SiteLayout equilateral(double side_um);

// Isosceles triangle with legs r12 = r23 = r and base r13 = 2 r cos(gamma/2);
// gamma = 0 is the collinear chain 1-2-3 and gamma = 120 recovers the
// equilateral triangle. Sites indexed counterclockwise, r_ref = r.
SiteLayout isosceles(double gamma_deg, double r_um);

// Regular plaquettes, counterclockwise indexing, r_ref = side.
SiteLayout square(double side_um);
SiteLayout honeycomb(double side_um);

SiteLayout custom_layout(std::vector<std::array<double, 2>> pos_um, double r_ref_um);

// Distance and directed polar angle for the i -> j bond (0-based indices).
BondGeometry bond(const SiteLayout& layout, int i, int j);

// Independent Gaussian displacement of every coordinate, std dev sigma.
SiteLayout jitter(const SiteLayout& layout, double sigma_um, RngStream& rng);

// Reduce an angle to (-pi, pi].
double wrap_angle(double a);

}  // namespace chiralhop

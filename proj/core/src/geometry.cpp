#include "chiralhop/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chiralhop {

namespace {
constexpr double kPi = std::numbers::pi;

void check_positive(double v, const char* what) {
  if (!(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
}

void check_distinct_positions(const SiteLayout& layout) {
  const int n = layout.n_sites();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double dx = layout.pos_um[j][0] - layout.pos_um[i][0];
      const double dy = layout.pos_um[j][1] - layout.pos_um[i][1];
      if (!(std::hypot(dx, dy) > 0.0))
        throw std::invalid_argument("layout has coincident sites");
    }
}
}  // namespace

double wrap_angle(double a) {
  double x = std::remainder(a, 2.0 * kPi);
  if (x <= -kPi) x += 2.0 * kPi;
  return x;
}

SiteLayout equilateral(double side_um) {
  check_positive(side_um, "equilateral side");
  const double circum = side_um / std::sqrt(3.0);
  const double half = side_um / 2.0;
  SiteLayout layout;
  // site 1 on top, 2 bottom-left, 3 bottom-right: counterclockwise, centroid
  // at the origin, exactly mirror symmetric under x -> -x (swaps 2 and 3)
  layout.pos_um = {{0.0, circum}, {-half, -circum / 2.0}, {half, -circum / 2.0}};
  layout.r_ref_um = side_um;
  return layout;
}

SiteLayout isosceles(double gamma_deg, double r_um) {
  if (!(gamma_deg >= 0.0 && gamma_deg < 180.0))
    throw std::invalid_argument("isosceles gamma must lie in [0, 180) degrees");
  check_positive(r_um, "isosceles leg length");
  const double g = gamma_deg * kPi / 180.0;
  const double d = r_um * std::cos(g / 2.0);  // half of r13
  const double s = r_um * std::sin(g / 2.0);
  SiteLayout layout;
  // apex (site 2) below the 1-3 line keeps the indexing counterclockwise;
  // gamma = 0 degenerates to the collinear chain 1-2-3
  layout.pos_um = {{-d, 0.0}, {0.0, -s}, {d, 0.0}};
  layout.r_ref_um = r_um;
  check_distinct_positions(layout);
  return layout;
}

SiteLayout square(double side_um) {
  check_positive(side_um, "square side");
  const double h = side_um / 2.0;
  SiteLayout layout;
  layout.pos_um = {{-h, -h}, {h, -h}, {h, h}, {-h, h}};
  layout.r_ref_um = side_um;
  return layout;
}

SiteLayout honeycomb(double side_um) {
  check_positive(side_um, "honeycomb side");
  SiteLayout layout;
  layout.pos_um.resize(6);
  // regular hexagon: circumradius equals the side length
  for (int k = 0; k < 6; ++k) {
    const double theta = (2.0 * kPi / 6.0) * k;
    layout.pos_um[static_cast<std::size_t>(k)] = {side_um * std::cos(theta),
                                                  side_um * std::sin(theta)};
  }
  layout.r_ref_um = side_um;
  return layout;
}

SiteLayout custom_layout(std::vector<std::array<double, 2>> pos_um, double r_ref_um) {
  check_positive(r_ref_um, "custom layout r_ref");
  if (pos_um.empty()) throw std::invalid_argument("custom layout needs at least one site");
  SiteLayout layout;
  layout.pos_um = std::move(pos_um);
  layout.r_ref_um = r_ref_um;
  check_distinct_positions(layout);
  return layout;
}

BondGeometry bond(const SiteLayout& layout, int i, int j) {
  const int n = layout.n_sites();
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("bond: site index out of range");
  if (i == j) throw std::invalid_argument("bond: i and j must differ");
  const double dx = layout.pos_um[static_cast<std::size_t>(j)][0] -
                    layout.pos_um[static_cast<std::size_t>(i)][0];
  const double dy = layout.pos_um[static_cast<std::size_t>(j)][1] -
                    layout.pos_um[static_cast<std::size_t>(i)][1];
  BondGeometry b;
  b.r_um = std::hypot(dx, dy);
  if (!(b.r_um > 0.0)) throw std::invalid_argument("bond: coincident sites");
  b.phi_rad = wrap_angle(std::atan2(dy, dx));
  return b;
}

SiteLayout jitter(const SiteLayout& layout, double sigma_um, RngStream& rng) {
  if (sigma_um < 0.0) throw std::invalid_argument("jitter sigma must be >= 0");
  SiteLayout out = layout;
  if (sigma_um == 0.0) return out;
  for (auto& p : out.pos_um) {
    p[0] += sigma_um * rng.normal();
    p[1] += sigma_um * rng.normal();
  }
  return out;
}

}  // namespace chiralhop

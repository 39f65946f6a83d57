#include "chiralhop/peierls.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "chiralhop/geometry.hpp"

namespace chiralhop {

namespace {
constexpr double kPi = std::numbers::pi;

void require_mu(double mu) {
  if (mu == 0.0)
    throw std::invalid_argument("mu = 0: the perturbative formulas are undefined");
}

Complex polar(double mag, double angle) {
  return Complex(mag * std::cos(angle), mag * std::sin(angle));
}
}  // namespace

double ComplexHop::magnitude() const { return std::abs(amplitude); }

double ComplexHop::phase() const { return wrap_angle(std::arg(amplitude)); }

ComplexHop triangle_hop(double t_b, double w, double mu) {
  require_mu(mu);
  return ComplexHop{t_b + polar(1.0, 4.0 * kPi / 3.0) * (w * w / mu)};
}

ComplexHop two_excitation_hop(double t_b, double w, double mu) {
  require_mu(mu);
  const double w2 = w * w;
  return ComplexHop{t_b + polar(1.0, -4.0 * kPi / 3.0) * (w2 * w2 / (mu * mu * mu))};
}

EffectiveParams effective_params(const ComplexHop& hop, double t_b) {
  EffectiveParams eff;
  eff.t = hop.magnitude();
  eff.phi = hop.phase();
  if (!(eff.t > 0.0)) throw std::invalid_argument("effective_params: zero hop magnitude");
  eff.delta = (t_b - eff.t) / eff.t;
  return eff;
}

TriangleFluxes isosceles_fluxes(double gamma_deg, const VModelParams& params) {
  if (!(gamma_deg >= 0.0 && gamma_deg < 180.0))
    throw std::invalid_argument("isosceles_fluxes: gamma must lie in [0, 180) degrees");
  require_mu(params.mu);
  const double s = params.field_sign;
  const double g = gamma_deg * kPi / 180.0;
  const double kappa = 1.0 / std::pow(2.0 * std::cos(g / 2.0), 3.0);
  const double w2_mu = params.w * params.w / params.mu;

  TriangleFluxes out;
  out.gamma_deg = gamma_deg;
  out.kappa = kappa;
  const Complex leg = params.t_b + kappa * w2_mu * polar(1.0, s * g);
  const Complex base = kappa * params.t_b + w2_mu * polar(1.0, -2.0 * s * g);
  out.bond_amplitudes = {leg, leg, base};
  for (int k = 0; k < 3; ++k)
    out.bond_phases[static_cast<std::size_t>(k)] =
        wrap_angle(std::arg(out.bond_amplitudes[static_cast<std::size_t>(k)]));
  out.total_flux =
      wrap_angle(out.bond_phases[0] + out.bond_phases[1] + out.bond_phases[2]);
  return out;
}

SquareCouplings square_couplings(const VModelParams& params) {
  require_mu(params.mu);
  const double s = params.field_sign;
  const double w2_mu = params.w * params.w / params.mu;
  SquareCouplings out;
  out.nn = ComplexHop{params.t_b + Complex(0.0, s * w2_mu / std::sqrt(2.0))};
  out.diagonal = params.t_b / std::pow(2.0, 1.5) - 2.0 * w2_mu;
  out.total_flux = wrap_angle(4.0 * out.nn.phase());
  return out;
}

HoneycombCouplings honeycomb_couplings(const VModelParams& params) {
  require_mu(params.mu);
  const double s = params.field_sign;
  const double w2_mu = params.w * params.w / params.mu;
  const double sqrt3 = std::sqrt(3.0);
  HoneycombCouplings out;
  out.nn = ComplexHop{params.t_b + 3.0 * w2_mu / (4.0 * sqrt3) * polar(1.0, s * kPi / 3.0)};
  out.nnn = ComplexHop{params.t_b / std::pow(3.0, 1.5) +
                       139.0 * w2_mu / 108.0 * polar(1.0, s * 2.0 * kPi / 3.0)};
  out.third = params.t_b / 8.0 - 4.0 * w2_mu / (3.0 * sqrt3);
  out.alternating_flux = wrap_angle(out.nn.phase() - out.nnn.phase());
  out.total_flux = wrap_angle(6.0 * out.nn.phase());
  return out;
}

double wrap_half_turn(double a) {
  double x = std::remainder(a, kPi);
  if (x <= -kPi / 2.0) x += kPi;
  return x;
}

}  // namespace chiralhop

#include "chiralhop/model.hpp"

#include <cmath>
#include <stdexcept>

namespace chiralhop {

double scale_coupling(double x_ref, double r_ref_um, double r_um) {
  if (!(r_um > 0.0)) throw std::invalid_argument("scale_coupling: r must be positive");
  if (!(r_ref_um > 0.0)) throw std::invalid_argument("scale_coupling: r_ref must be positive");
  const double ratio = r_ref_um / r_um;
  return x_ref * ratio * ratio * ratio;
}

namespace {
void validate_params(const VModelParams& p) {
  if (p.t_a < 0.0 || p.t_b < 0.0 || p.w < 0.0)
    throw std::invalid_argument("VModelParams: t_a, t_b, w must be >= 0");
  if (p.field_sign != 1 && p.field_sign != -1)
    throw std::invalid_argument("VModelParams: field_sign must be +1 or -1");
}
}  // namespace

Matrix full_v_hamiltonian(const SiteLayout& layout, const VModelParams& params) {
  validate_params(params);
  const int n = layout.n_sites();
  if (n < 2) throw std::invalid_argument("full_v_hamiltonian: need at least 2 sites");
  const ModelKind kind = ModelKind::VStructure;
  const long dim = basis_dimension(n, kind);
  Matrix H = Matrix::Zero(dim, dim);

  // Per ordered bond (dest, src): hop amplitudes and the doubled bond phase
  // e^{2 i phi} computed as ((dx + i dy)/r)^2, which keeps mirror-symmetric
  // layouts exactly conjugate-symmetric in floating point.
  struct BondTerm {
    int dest, src;
    double ta, tb, w;
    Complex flip_phase;  // phase on the minus(src) -> plus(dest) amplitude
  };
  std::vector<BondTerm> bonds;
  bonds.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1));
  for (int dest = 0; dest < n; ++dest) {
    for (int src = 0; src < n; ++src) {
      if (dest == src) continue;
      const double dx = layout.pos_um[static_cast<std::size_t>(src)][0] -
                        layout.pos_um[static_cast<std::size_t>(dest)][0];
      const double dy = layout.pos_um[static_cast<std::size_t>(src)][1] -
                        layout.pos_um[static_cast<std::size_t>(dest)][1];
      const double r = std::hypot(dx, dy);
      if (!(r > 0.0)) throw std::invalid_argument("full_v_hamiltonian: coincident sites");
      const double scale = scale_coupling(1.0, layout.r_ref_um, r);
      const Complex unit(dx / r, dy / r);
      const Complex e2iphi = unit * unit;
      BondTerm b;
      b.dest = dest;
      b.src = src;
      b.ta = params.t_a * scale;
      b.tb = params.t_b * scale;
      b.w = params.w * scale;
      b.flip_phase = (params.field_sign > 0) ? std::conj(e2iphi) : e2iphi;
      bonds.push_back(b);
    }
  }

  for (long col = 0; col < dim; ++col) {
    // on-site energies
    double diag = 0.0;
    for (int s = 0; s < n; ++s) {
      const int d = level_digit(col, s, n, kind);
      if (d == static_cast<int>(Level::Plus)) diag += params.mu / 2.0;
      if (d == static_cast<int>(Level::Minus)) diag -= params.mu / 2.0;
    }
    H(col, col) += diag;

    for (const BondTerm& b : bonds) {
      const int src_level = level_digit(col, b.src, n, kind);
      if (src_level == static_cast<int>(Level::Ground)) continue;
      if (level_digit(col, b.dest, n, kind) != static_cast<int>(Level::Ground)) continue;
      const long vacated = with_digit(col, b.src, static_cast<int>(Level::Ground), n, kind);
      if (src_level == static_cast<int>(Level::Plus)) {
        const long same = with_digit(vacated, b.dest, static_cast<int>(Level::Plus), n, kind);
        H(same, col) += -b.ta;
        const long flipped = with_digit(vacated, b.dest, static_cast<int>(Level::Minus), n, kind);
        H(flipped, col) += b.w * std::conj(b.flip_phase);
      } else {
        const long same = with_digit(vacated, b.dest, static_cast<int>(Level::Minus), n, kind);
        H(same, col) += -b.tb;
        const long flipped = with_digit(vacated, b.dest, static_cast<int>(Level::Plus), n, kind);
        H(flipped, col) += b.w * b.flip_phase;
      }
    }
  }
  return H;
}

Matrix effective_single_hamiltonian(double t, double phi, int n_sites) {
  if (t < 0.0) throw std::invalid_argument("effective_single_hamiltonian: t must be >= 0");
  if (n_sites < 2) throw std::invalid_argument("effective_single_hamiltonian: need >= 2 sites");
  Matrix H = Matrix::Zero(n_sites, n_sites);
  const Complex forward = -t * Complex(std::cos(phi), -std::sin(phi));  // -t e^{-i phi}
  for (int i = 0; i < n_sites; ++i) {
    const int j = (i + 1) % n_sites;
    H(j, i) += forward;
    H(i, j) += std::conj(forward);
  }
  return H;
}

Matrix many_body_effective(const EffectiveParams& eff) {
  if (eff.t < 0.0) throw std::invalid_argument("many_body_effective: t must be >= 0");
  const int n = 3;
  const ModelKind kind = ModelKind::Hardcore;
  const long dim = basis_dimension(n, kind);
  Matrix H = Matrix::Zero(dim, dim);
  const Complex phase_hop = -eff.t * Complex(std::cos(eff.phi), -std::sin(eff.phi));
  const double blocked_hop = -eff.t * (1.0 + eff.delta);
  for (long col = 0; col < dim; ++col) {
    for (int i = 0; i < n; ++i) {
      const int j = (i + 1) % n;
      const int spectator = (i + 2) % n;
      if (level_digit(col, i, n, kind) != 1) continue;
      if (level_digit(col, j, n, kind) != 0) continue;
      const long moved = with_digit(with_digit(col, i, 0, n, kind), j, 1, n, kind);
      const Complex amp =
          (level_digit(col, spectator, n, kind) == 1) ? Complex(blocked_hop, 0.0) : phase_hop;
      H(moved, col) += amp;
      H(col, moved) += std::conj(amp);
    }
  }
  return H;
}

Matrix add_vdw_shift(const Matrix& H, double v, int n_sites, ModelKind kind) {
  if (!std::isfinite(v)) throw std::invalid_argument("add_vdw_shift: v must be finite");
  Matrix out = H;
  if (v == 0.0) return out;
  const long dim = basis_dimension(n_sites, kind);
  if (out.rows() != dim) throw std::invalid_argument("add_vdw_shift: dimension mismatch");
  for (long i = 0; i < dim; ++i) {
    const int k = excitation_count(i, n_sites, kind);
    out(i, i) += v * (static_cast<double>(k) * (k - 1) / 2.0);
  }
  return out;
}

}  // namespace chiralhop

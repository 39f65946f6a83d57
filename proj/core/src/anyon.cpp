#include "chiralhop/anyon.hpp"

#include <cmath>
#include <stdexcept>

namespace chiralhop {

namespace {
constexpr int kDim = 8;

Matrix kron3(const Matrix& a, const Matrix& b, const Matrix& c) {
  Matrix ab(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      ab.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  Matrix abc(ab.rows() * c.rows(), ab.cols() * c.cols());
  for (Eigen::Index i = 0; i < ab.rows(); ++i)
    for (Eigen::Index j = 0; j < ab.cols(); ++j)
      abc.block(i * c.rows(), j * c.cols(), c.rows(), c.cols()) = ab(i, j) * c;
  return abc;
}

// e^{i scale * D} for a real diagonal operator D
Matrix phase_exp(const Matrix& diag_op, double scale) {
  Matrix out = Matrix::Zero(kDim, kDim);
  for (int i = 0; i < kDim; ++i) {
    const double d = diag_op(i, i).real();
    out(i, i) = Complex(std::cos(scale * d), std::sin(scale * d));
  }
  return out;
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }
}  // namespace

ModeAlgebra build_hardcore_modes() {
  Matrix id = Matrix::Identity(2, 2);
  Matrix lower = Matrix::Zero(2, 2);
  lower(0, 1) = Complex(1.0, 0.0);  // b |1> = |0>, basis order (|0>, |1>)
  ModeAlgebra alg;
  alg.b[0] = kron3(lower, id, id);
  alg.b[1] = kron3(id, lower, id);
  alg.b[2] = kron3(id, id, lower);
  for (int i = 0; i < 3; ++i)
    alg.number[static_cast<std::size_t>(i)] =
        alg.b[static_cast<std::size_t>(i)].adjoint() * alg.b[static_cast<std::size_t>(i)];
  return alg;
}

ModeAlgebra anyon_transform(const ModeAlgebra& algebra, double phi) {
  ModeAlgebra alg = algebra;
  alg.phi = phi;
  const Matrix id = Matrix::Identity(kDim, kDim);
  const Matrix& n1 = alg.number[0];
  const Matrix& n2 = alg.number[1];
  const Matrix& n3 = alg.number[2];
  // the constant offsets in the exponents only contribute overall phases but
  // are part of the transformation's definition, so they stay
  alg.B_dag[0] = phase_exp(3.0 * id - n2 - 2.0 * n3, -phi) * alg.b[0];
  alg.B_dag[1] = phase_exp(id + 2.0 * n1 - 3.0 * n3, -phi) * alg.b[1];
  alg.B_dag[2] = phase_exp(n1 - id, -phi) * alg.b[2];
  for (int i = 0; i < 3; ++i)
    alg.B[static_cast<std::size_t>(i)] = alg.B_dag[static_cast<std::size_t>(i)].adjoint();
  alg.has_anyons = true;
  return alg;
}

RelationReport verify_algebra(const ModeAlgebra& algebra) {
  if (!algebra.has_anyons)
    throw std::invalid_argument("verify_algebra: run anyon_transform first");
  const Matrix id = Matrix::Identity(kDim, kDim);
  const double phi = algebra.phi;
  RelationReport report;
  auto add = [&report](std::string name, double residual) {
    report.entries.push_back({std::move(name), residual});
    report.max_residual = std::max(report.max_residual, residual);
  };
  for (int n = 0; n < 3; ++n) {
    const Matrix& Bn = algebra.B[static_cast<std::size_t>(n)];
    const Matrix& Bnd = algebra.B_dag[static_cast<std::size_t>(n)];
    add("{B" + std::to_string(n + 1) + ",B" + std::to_string(n + 1) + "^+}-1",
        max_abs(Bn * Bnd + Bnd * Bn - id));
    add("{B" + std::to_string(n + 1) + ",B" + std::to_string(n + 1) + "}",
        max_abs(Bn * Bn + Bn * Bn));
  }
  for (int n = 0; n < 3; ++n) {
    for (int m = 0; m < 3; ++m) {
      if (n == m) continue;
      const double sign = n > m ? 1.0 : -1.0;
      const Complex ex(std::cos(3.0 * phi * sign), std::sin(3.0 * phi * sign));
      const Matrix& Bn = algebra.B[static_cast<std::size_t>(n)];
      const Matrix& Bm = algebra.B[static_cast<std::size_t>(m)];
      const Matrix& Bnd = algebra.B_dag[static_cast<std::size_t>(n)];
      add("B" + std::to_string(n + 1) + "B" + std::to_string(m + 1) + " exchange",
          max_abs(Bn * Bm - ex * Bm * Bn));
      add("B" + std::to_string(n + 1) + "^+B" + std::to_string(m + 1) + " exchange",
          max_abs(Bnd * Bm - std::conj(ex) * Bm * Bnd));
    }
  }
  return report;
}

Matrix density_dependent_hamiltonian(const ModeAlgebra& algebra, double t, double delta,
                                     double phi) {
  const Matrix id = Matrix::Identity(kDim, kDim);
  Matrix H = Matrix::Zero(kDim, kDim);
  for (int i = 0; i < 3; ++i) {
    const int ip1 = (i + 1) % 3;
    const int ip2 = (i + 2) % 3;
    const Matrix hop = algebra.b[static_cast<std::size_t>(ip1)].adjoint() *
                       algebra.b[static_cast<std::size_t>(i)];
    const Matrix term =
        phase_exp(id - algebra.number[static_cast<std::size_t>(ip2)], phi) * hop +
        delta * hop * algebra.number[static_cast<std::size_t>(ip2)];
    H += -t * (term + term.adjoint());
  }
  return H;
}

Matrix anyon_hamiltonian(const ModeAlgebra& algebra, double t, double delta) {
  if (!algebra.has_anyons)
    throw std::invalid_argument("anyon_hamiltonian: run anyon_transform first");
  const Matrix id = Matrix::Identity(kDim, kDim);
  Matrix H = Matrix::Zero(kDim, kDim);
  for (int i = 0; i < 3; ++i) {
    const int ip1 = (i + 1) % 3;
    const int ip2 = (i + 2) % 3;
    const Matrix hop = algebra.B_dag[static_cast<std::size_t>(ip1)] *
                       algebra.B[static_cast<std::size_t>(i)];
    const Matrix hole = id - algebra.B_dag[static_cast<std::size_t>(ip2)] *
                                 algebra.B[static_cast<std::size_t>(ip2)];
    const Matrix term = hop + delta * hop * hole;
    H += -t * (term + term.adjoint());
  }
  return H;
}

double hamiltonian_equivalence(double t, double delta, double phi) {
  const ModeAlgebra alg = anyon_transform(build_hardcore_modes(), phi);
  const Matrix Hb = density_dependent_hamiltonian(alg, t, delta, phi);
  const Matrix HB = anyon_hamiltonian(alg, t, delta);
  return max_abs(Hb - HB);
}

}  // namespace chiralhop

#include "chiralhop/evolve.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "chiralhop/operators.hpp"

namespace chiralhop {

namespace {
constexpr double kNormTol = 1e-10;

void check_norm(const Vector& psi, const char* what) {
  const double n = psi.norm();
  if (std::abs(n - 1.0) > kNormTol) {
    std::ostringstream msg;
    msg << what << ": state norm " << n << " deviates from 1 beyond " << kNormTol;
    throw std::runtime_error(msg.str());
  }
}
}  // namespace

Propagator::Propagator(const Matrix& H, double hermitian_tol) {
  require_hermitian(H, hermitian_tol);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(H);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("Propagator: eigendecomposition failed");
  evals_ = solver.eigenvalues();
  evecs_ = solver.eigenvectors();
}

Vector Propagator::at(const Vector& psi0, double t_us) const {
  check_norm(psi0, "Propagator::at (input)");
  const Vector c = evecs_.adjoint() * psi0;
  Vector phased(c.size());
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    const double angle = -2.0 * std::numbers::pi * evals_(k) * t_us;
    phased(k) = c(k) * Complex(std::cos(angle), std::sin(angle));
  }
  Vector psi = evecs_ * phased;
  check_norm(psi, "Propagator::at (output)");
  return psi;
}

std::vector<Vector> Propagator::evolve(const Vector& psi0, std::span<const double> times_us) const {
  check_norm(psi0, "Propagator::evolve (input)");
  const Vector c = evecs_.adjoint() * psi0;
  std::vector<Vector> out;
  out.reserve(times_us.size());
  Vector phased(c.size());
  for (double t : times_us) {
    for (Eigen::Index k = 0; k < c.size(); ++k) {
      const double angle = -2.0 * std::numbers::pi * evals_(k) * t;
      phased(k) = c(k) * Complex(std::cos(angle), std::sin(angle));
    }
    Vector psi = evecs_ * phased;
    check_norm(psi, "Propagator::evolve (output)");
    out.push_back(std::move(psi));
  }
  return out;
}

std::vector<Vector> evolve(const Matrix& H, const Vector& psi0, std::span<const double> times_us) {
  return Propagator(H).evolve(psi0, times_us);
}

}  // namespace chiralhop

#pragma once

#include <span>
#include <vector>

#include "chiralhop/types.hpp"

namespace chiralhop {

// Exact unitary time evolution by one dense Hermitian eigendecomposition,
// reused for every requested time: psi(t) = exp(-i 2 pi H t) psi0 with H in
// h*MHz and t in microseconds.
class Propagator {
 public:
  // Throws std::invalid_argument on a non-Hermitian H and std::runtime_error
  // when the eigensolver fails.
  explicit Propagator(const Matrix& H, double hermitian_tol = 1e-12);

  // psi0 must be normalized within 1e-10; the result stays normalized to the
  // same tolerance (checked, failure throws).
  Vector at(const Vector& psi0, double t_us) const;
  std::vector<Vector> evolve(const Vector& psi0, std::span<const double> times_us) const;

  const Eigen::VectorXd& eigenvalues() const { return evals_; }
  const Matrix& eigenvectors() const { return evecs_; }

 private:
  Eigen::VectorXd evals_;
  Matrix evecs_;
};

std::vector<Vector> evolve(const Matrix& H, const Vector& psi0, std::span<const double> times_us);

}  // namespace chiralhop

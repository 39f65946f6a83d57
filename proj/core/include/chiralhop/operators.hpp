#pragma once

#include "chiralhop/basis.hpp"
#include "chiralhop/types.hpp"

namespace chiralhop {

// Largest entrywise deviation from Hermiticity, max |H - H^dagger|.
double hermiticity_defect(const Matrix& H);

// Throws std::invalid_argument when the defect exceeds tol.
void require_hermitian(const Matrix& H, double tol = 1e-12);

// Diagonal operator counting excited sites.
Matrix number_operator(int n_sites, ModelKind kind);

double real_expectation(const Matrix& A, const Vector& psi);

// Largest entrywise magnitude of the commutator [A, B].
double commutator_norm(const Matrix& A, const Matrix& B);

}  // namespace chiralhop

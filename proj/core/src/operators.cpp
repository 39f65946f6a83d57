#include "chiralhop/operators.hpp"

#include <sstream>
#include <stdexcept>

namespace chiralhop {

double hermiticity_defect(const Matrix& H) {
  return (H - H.adjoint()).cwiseAbs().maxCoeff();
}

void require_hermitian(const Matrix& H, double tol) {
  if (H.rows() != H.cols()) throw std::invalid_argument("require_hermitian: matrix not square");
  const double defect = hermiticity_defect(H);
  if (!(defect <= tol)) {
    std::ostringstream msg;
    msg << "operator is not Hermitian: max |H - H^dagger| = " << defect << " exceeds " << tol;
    throw std::invalid_argument(msg.str());
  }
}

Matrix number_operator(int n_sites, ModelKind kind) {
  const long dim = basis_dimension(n_sites, kind);
  Matrix N = Matrix::Zero(dim, dim);
  for (long i = 0; i < dim; ++i) N(i, i) = excitation_count(i, n_sites, kind);
  return N;
}

double real_expectation(const Matrix& A, const Vector& psi) {
  return (psi.adjoint() * A * psi)(0, 0).real();
}

double commutator_norm(const Matrix& A, const Matrix& B) {
  return (A * B - B * A).cwiseAbs().maxCoeff();
}

}  // namespace chiralhop

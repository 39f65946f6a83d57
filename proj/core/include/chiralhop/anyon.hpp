#pragma once

#include <array>
#include <string>
#include <vector>

#include "chiralhop/types.hpp"

namespace chiralhop {

// Explicit matrices for the three hard-core modes b_i on the 8-dimensional
// occupation space of 3 sites (plain site-ordered tensor products, no string
// factors) and, once transformed, the anyonic modes B_n with statistical
// angle 3 phi.
struct ModeAlgebra {
  std::array<Matrix, 3> b;        // annihilation
  std::array<Matrix, 3> number;   // n_i = b_i^dag b_i
  std::array<Matrix, 3> B;        // anyonic annihilation, valid when has_anyons
  std::array<Matrix, 3> B_dag;
  double phi = 0.0;
  bool has_anyons = false;
};

ModeAlgebra build_hardcore_modes();

// Diagonal-phase transformation producing the anyonic modes:
//   B_1^dag = e^{-i phi (3 - n_2 - 2 n_3)} b_1
//   B_2^dag = e^{-i phi (1 + 2 n_1 - 3 n_3)} b_2
//   B_3^dag = e^{-i phi (n_1 - 1)} b_3
// Note B^dag is proportional to an annihilation operator: the transformation
// carries an implicit particle-hole map, so one excitation corresponds to two
// anyons and vice versa.
ModeAlgebra anyon_transform(const ModeAlgebra& algebra, double phi);

struct RelationReport {
  struct Entry {
    std::string name;
    double residual = 0.0;
  };
  std::vector<Entry> entries;
  double max_residual = 0.0;
};

// Checks the anyonic exchange algebra as entrywise matrix identities:
// {B_n, B_n^dag} = 1, {B_n, B_n} = 0,
// B_n B_m = e^{3 i phi sign(n-m)} B_m B_n,
// B_n^dag B_m = e^{-3 i phi sign(n-m)} B_m B_n^dag.
RelationReport verify_algebra(const ModeAlgebra& algebra);

// Density-dependent ring Hamiltonian built from the b matrices:
//   H = -t sum_i [ e^{i phi (1 - n_{i+2})} b_{i+1}^dag b_i
//                  + delta b_{i+1}^dag b_i n_{i+2} + h.c. ].
// The hop phase convention here pairs with the B transformation above; it is
// the complex conjugate of model::many_body_effective at the same phi.
Matrix density_dependent_hamiltonian(const ModeAlgebra& algebra, double t, double delta,
                                     double phi);

// The same Hamiltonian written in the anyonic modes, without any phase:
//   H = -t sum_i [ B_{i+1}^dag B_i
//                  + delta B_{i+1}^dag B_i (1 - B_{i+2}^dag B_{i+2}) + h.c. ].
Matrix anyon_hamiltonian(const ModeAlgebra& algebra, double t, double delta);

// Entrywise max |H_b - H_B| between the two constructions at the same
// (t, delta, phi); the transformation makes them equal to rounding.
double hamiltonian_equivalence(double t, double delta, double phi);

}  // namespace chiralhop

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace chiralhop {

using Real = double;
using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// All Hamiltonian entries are frequencies in h*MHz, times are in microseconds,
// distances in micrometers. The propagator is exp(-i 2 pi H t).

}  // namespace chiralhop

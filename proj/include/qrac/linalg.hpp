#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qrac {

using Complex = std::complex<double>;
using Ket = Eigen::VectorXcd;
using Operator = Eigen::MatrixXcd;

// Centralized numerical tolerances.
inline constexpr double kOrthoTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-12;

/// Ordered orthonormal family of dim kets.
struct Basis {
  int dim = 0;
  std::vector<Ket> kets;
};

bool is_odd_prime(int d);

// 1 if d is an odd prime, 0 otherwise. Controls the k^2 phase of the
// third basis and the orbit relabeling rule.
int phase_delta(int d);

// omega = e^{+2 pi i / d}
Complex omega(int d);

Basis computational_basis(int d);

// |e_l>[k] = omega^{kl} / sqrt(d)
Basis fourier_basis(int d);

// |f_l>[k] = exp(2 pi i (kl)/d) * exp(+pi i k^2 (1+delta_d)/d) / sqrt(d)
Basis third_mub(int d);

// Cyclic shift |k> -> |k+1 mod d>.
Operator weyl_x(int d);

// Clock phase |k> -> omega^k |k>.
Operator weyl_z(int d);

// |<b_l|state>|^2
double outcome_prob(const Ket& state, const Basis& basis, int l);

// max over (i,j) of | |<b1_i|b2_j>|^2 - 1/d |
double mub_overlap_deviation(const Basis& b1, const Basis& b2);

// max over (i,j) of | <b_i|b_j> - delta_ij |
double orthonormality_deviation(const Basis& b);

}  // namespace qrac

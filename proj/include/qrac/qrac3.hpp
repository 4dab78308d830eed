#pragma once

#include <vector>

#include "qrac/linalg.hpp"

namespace qrac::q3 {

// Overlap <e_0|f_a> = (1/d) sum_k omega^{ak} exp(+pi i k^2 (1+delta_d)/d).
Complex xi(int d, int a);

struct QuadraticCoeffs {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};

// Coefficients of the equal-success constraint A t^2 + B t + C = 0.
QuadraticCoeffs quadratic_coeffs(int d, int a, double r);

// Real roots, ordered (t_plus first). Empty when the discriminant is
// negative; a single root when A degenerates to a linear equation.
std::vector<double> t_solutions(int d, int a, double r);

// Closed-form normalization N^2 of the ansatz state.
double norm_squared(int d, int a, double r, double t);

// (|0> + (r+it)|e_0> + (r-it)|f_a>) / N
Ket base_state(int d, int a, double r, double t);

struct OptimizedAnsatz {
  int d = 0;
  int a = 0;
  double r = 0.0;
  double t = 0.0;
  int branch = +1;  // which root of the quadratic
  double success = 0.0;
};

// Scan window for r. The paper gives no a-priori bound on the optimal r;
// widen the window if an optimum ever sits near the boundary.
inline constexpr double kScanLo = -3.0;
inline constexpr double kScanHi = 3.0;

// Maximize (1 + 2r/sqrt(d))^2 / N^2 over r and both root branches.
OptimizedAnsatz optimize_base(int d, int a);

struct Family {
  int d = 0;
  std::vector<OptimizedAnsatz> per_a;
  double average = 0.0;
  double worst = 0.0;
};

Family success3(int d);

// Base index serving the target triple: a = x2 - x1 + (1+delta_d) x0 mod d.
int base_index(int d, int x0, int x1, int x2);

// X^{x0} Z^{x1} applied to the optimized base state for the matching a.
Ket encode3(const Family& family, int x0, int x1, int x2);

// Z-power then X-shift applied to an arbitrary ket.
Ket apply_xz(const Ket& psi, int x_power, int z_power);

}  // namespace qrac::q3

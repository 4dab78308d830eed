#pragma once

#include "qrac/linalg.hpp"

namespace qrac::q2 {

// X^{x0} Z^{x1} (|0> + |e_0>) / sqrt(2 + 2/sqrt(d))
Ket encode2(int d, int x0, int x1);

// (1/2)(1 + 1/sqrt(d))
double success2_closed(int d);

struct SimulatedSuccess {
  double average = 0.0;
  double worst = 0.0;
};

// Full enumeration over all d^2 encodings and both questions.
SimulatedSuccess success2_simulated(int d);

// success2_closed(d) / classical_success(2, d)
double advantage2(int d);

}  // namespace qrac::q2

#include "qrac/qrac2.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qrac/classical.hpp"

namespace qrac::q2 {

Ket encode2(int d, int x0, int x1) {
  if (d < 2) throw std::invalid_argument("dimension must be >= 2");
  if (x0 < 0 || x0 >= d || x1 < 0 || x1 >= d) {
    throw std::invalid_argument("encoded symbol out of range");
  }
  const double norm = std::sqrt(2.0 + 2.0 / std::sqrt(double(d)));

  // X^{x0} Z^{x1} (|0> + |e_0>) applied entrywise: Z scales |k> by omega^{k x1},
  // X then shifts k -> k + x0.
  Ket psi(d);
  const double inv_sqrt_d = 1.0 / std::sqrt(double(d));
  for (int k = 0; k < d; ++k) {
    Complex amp = inv_sqrt_d;  // |e_0> component
    if (k == 0) amp += 1.0;    // |0> component
    amp *= std::polar(1.0, 2.0 * std::numbers::pi * double(k) * double(x1) / d);
    psi[(k + x0) % d] = amp / norm;
  }
  return psi;
}

double success2_closed(int d) {
  if (d < 2) throw std::invalid_argument("dimension must be >= 2");
  return 0.5 * (1.0 + 1.0 / std::sqrt(double(d)));
}

SimulatedSuccess success2_simulated(int d) {
  const Basis comp = computational_basis(d);
  const Basis fourier = fourier_basis(d);

  double sum = 0.0;
  double worst = 1.0;
  for (int x0 = 0; x0 < d; ++x0) {
    for (int x1 = 0; x1 < d; ++x1) {
      const Ket psi = encode2(d, x0, x1);
      const double p0 = outcome_prob(psi, comp, x0);
      const double p1 = outcome_prob(psi, fourier, x1);
      sum += p0 + p1;
      worst = std::min({worst, p0, p1});
    }
  }
  return {sum / (2.0 * d * d), worst};
}

double advantage2(int d) {
  return success2_closed(d) / classical::classical_success(2, d).value;
}

}  // namespace qrac::q2

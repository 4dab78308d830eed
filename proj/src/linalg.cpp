#include "qrac/linalg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qrac {

namespace {

void require_dim(int d) {
  if (d < 2) throw std::invalid_argument("dimension must be >= 2");
}

}  // namespace

bool is_odd_prime(int d) {
  if (d < 3 || d % 2 == 0) return false;
  for (int f = 3; f * f <= d; f += 2) {
    if (d % f == 0) return false;
  }
  return true;
}

int phase_delta(int d) { return is_odd_prime(d) ? 1 : 0; }

Complex omega(int d) {
  require_dim(d);
  const double arg = 2.0 * std::numbers::pi / d;
  return {std::cos(arg), std::sin(arg)};
}

Basis computational_basis(int d) {
  require_dim(d);
  Basis b{d, {}};
  b.kets.reserve(d);
  for (int l = 0; l < d; ++l) {
    Ket k = Ket::Zero(d);
    k[l] = 1.0;
    b.kets.push_back(std::move(k));
  }
  return b;
}

Basis fourier_basis(int d) {
  require_dim(d);
  const double norm = 1.0 / std::sqrt(double(d));
  Basis b{d, {}};
  b.kets.reserve(d);
  for (int l = 0; l < d; ++l) {
    Ket v(d);
    for (int k = 0; k < d; ++k) {
      const double arg = 2.0 * std::numbers::pi * double(k) * double(l) / d;
      v[k] = norm * Complex{std::cos(arg), std::sin(arg)};
    }
    b.kets.push_back(std::move(v));
  }
  return b;
}

Basis third_mub(int d) {
  require_dim(d);
  const int delta = phase_delta(d);
  const double norm = 1.0 / std::sqrt(double(d));
  Basis b{d, {}};
  b.kets.reserve(d);
  for (int l = 0; l < d; ++l) {
    Ket v(d);
    for (int k = 0; k < d; ++k) {
      // The k^2/2 exponent is evaluated on the +pi branch.
      const double arg = 2.0 * std::numbers::pi * double(k) * double(l) / d +
                         std::numbers::pi * double(k) * double(k) * (1 + delta) / d;
      v[k] = norm * Complex{std::cos(arg), std::sin(arg)};
    }
    b.kets.push_back(std::move(v));
  }
  return b;
}

Operator weyl_x(int d) {
  require_dim(d);
  Operator x = Operator::Zero(d, d);
  for (int k = 0; k < d; ++k) x((k + 1) % d, k) = 1.0;
  return x;
}

Operator weyl_z(int d) {
  require_dim(d);
  const Complex w = omega(d);
  Operator z = Operator::Zero(d, d);
  Complex phase = 1.0;
  for (int k = 0; k < d; ++k) {
    z(k, k) = phase;
    phase *= w;
  }
  return z;
}

double outcome_prob(const Ket& state, const Basis& basis, int l) {
  if (state.size() != basis.dim) throw std::invalid_argument("dimension mismatch");
  if (l < 0 || l >= basis.dim) throw std::invalid_argument("outcome index out of range");
  return std::norm(basis.kets[l].dot(state));
}

double mub_overlap_deviation(const Basis& b1, const Basis& b2) {
  if (b1.dim != b2.dim) throw std::invalid_argument("dimension mismatch");
  const double target = 1.0 / b1.dim;
  double worst = 0.0;
  for (const auto& u : b1.kets) {
    for (const auto& v : b2.kets) {
      worst = std::max(worst, std::abs(std::norm(u.dot(v)) - target));
    }
  }
  return worst;
}

double orthonormality_deviation(const Basis& b) {
  double worst = 0.0;
  for (int i = 0; i < b.dim; ++i) {
    for (int j = 0; j < b.dim; ++j) {
      const Complex ip = b.kets[i].dot(b.kets[j]);
      worst = std::max(worst, std::abs(ip - (i == j ? Complex{1.0} : Complex{0.0})));
    }
  }
  return worst;
}

}  // namespace qrac

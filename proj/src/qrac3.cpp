#include "qrac/qrac3.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace qrac::q3 {

namespace {

constexpr double kDegenerateA = 1e-14;
constexpr double kGridStep = 1e-3;
constexpr double kGridLo = kScanLo;
constexpr double kGridHi = kScanHi;
constexpr double kRefineTol = 1e-10;

void require_indices(int d, int a) {
  if (d < 2) throw std::invalid_argument("dimension must be >= 2");
  if (a < 0 || a >= d) throw std::invalid_argument("base index out of range");
}

// The ansatz has isolated points where the unnormalized state vanishes
// identically; the optimum can be a limit along such a ray. Points with
// N^2 below this floor are treated as infeasible: one ulp of (r, t)
// moves the probabilities by ~eps/N^2 there, so the equal-probability
// constraint is not representable in doubles, while backing off to the
// floor costs only ~1e-5 in success probability.
constexpr double kNormFloor = 1e-6;

double objective(int d, int a, double r, double t) {
  const double n2 = norm_squared(d, a, r, t);
  if (n2 <= kNormFloor) return -std::numeric_limits<double>::infinity();
  const double num = 1.0 + 2.0 * r / std::sqrt(double(d));
  return num * num / n2;
}

// |<0|psi>|^2 from the unnormalized components. Near-degenerate
// normalizations (the optimum can sit on an N^2 -> 0 ray) make the
// closed-form ratio cancel catastrophically; this route stays accurate.
double direct_success(int d, int a, double r, double t) {
  const Basis fourier = fourier_basis(d);
  const Basis third = third_mub(d);
  Ket raw = Ket::Zero(d);
  raw[0] = 1.0;
  raw += Complex(r, t) * fourier.kets[0];
  raw += Complex(r, -t) * third.kets[a];
  return std::norm(raw[0]) / raw.squaredNorm();
}

// Root of the constraint quadratic for one branch, or nothing when the
// discriminant is negative.
std::optional<double> root_for_branch(int d, int a, double r, int branch) {
  const auto [A, B, C] = quadratic_coeffs(d, a, r);
  if (std::abs(A) < kDegenerateA) {
    if (std::abs(B) < kDegenerateA) return std::nullopt;
    return -C / B;
  }
  const double disc = B * B - 4.0 * A * C;
  if (disc < 0.0) return std::nullopt;
  return (-B + branch * std::sqrt(disc)) / (2.0 * A);
}

double branch_objective(int d, int a, double r, int branch) {
  const auto t = root_for_branch(d, a, r, branch);
  if (!t) return -std::numeric_limits<double>::infinity();
  return objective(d, a, r, *t);
}

}  // namespace

Complex xi(int d, int a) {
  require_indices(d, a);
  const int delta = phase_delta(d);
  Complex sum = 0.0;
  for (int k = 0; k < d; ++k) {
    const double arg = 2.0 * std::numbers::pi * double(a) * k / d +
                       std::numbers::pi * double(k) * double(k) * (1 + delta) / d;
    sum += std::polar(1.0, arg);
  }
  return sum / double(d);
}

QuadraticCoeffs quadratic_coeffs(int d, int a, double r) {
  const Complex x = xi(d, a);
  const double re = x.real();
  const double im = x.imag();
  const double mod2 = std::norm(x);
  const double sqrt_d = std::sqrt(double(d));

  QuadraticCoeffs c;
  c.A = 1.0 + mod2 - 2.0 * re;
  c.B = 2.0 * im * (2.0 * r + 1.0 / sqrt_d);
  c.C = r * r * (mod2 + 2.0 * re + 1.0 - 4.0 / d) +
        (2.0 * r / sqrt_d) * (re - 1.0) + 1.0 / d - 1.0;
  return c;
}

std::vector<double> t_solutions(int d, int a, double r) {
  const auto [A, B, C] = quadratic_coeffs(d, a, r);
  if (std::abs(A) < kDegenerateA) {
    if (std::abs(B) < kDegenerateA) {
      throw std::domain_error("degenerate constraint: A and B both vanish");
    }
    return {-C / B};
  }
  const double disc = B * B - 4.0 * A * C;
  if (disc < 0.0) return {};
  const double root = std::sqrt(disc);
  return {(-B + root) / (2.0 * A), (-B - root) / (2.0 * A)};
}

double norm_squared(int d, int a, double r, double t) {
  const Complex x = xi(d, a);
  return 1.0 + 4.0 * r / std::sqrt(double(d)) + 2.0 * r * r + 2.0 * t * t +
         2.0 * x.real() * (r * r - t * t) + 4.0 * r * t * x.imag();
}

Ket base_state(int d, int a, double r, double t) {
  require_indices(d, a);
  if (norm_squared(d, a, r, t) <= 1e-12) {
    throw std::domain_error("degenerate normalization");
  }

  const Basis fourier = fourier_basis(d);
  const Basis third = third_mub(d);
  Ket psi = Ket::Zero(d);
  psi[0] = 1.0;
  psi += Complex(r, t) * fourier.kets[0];
  psi += Complex(r, -t) * third.kets[a];
  // Normalize by the computed norm; the closed-form N^2 agrees to within
  // absolute rounding but loses relative accuracy when N^2 is tiny.
  psi.normalize();
  return psi;
}

OptimizedAnsatz optimize_base(int d, int a) {
  require_indices(d, a);

  OptimizedAnsatz best{d, a, 0.0, 0.0, +1,
                       -std::numeric_limits<double>::infinity()};
  const int steps = int(std::round((kGridHi - kGridLo) / kGridStep));
  for (int i = 0; i <= steps; ++i) {
    const double r = kGridLo + i * kGridStep;
    for (int branch : {+1, -1}) {
      const double p = branch_objective(d, a, r, branch);
      // Strict > keeps t_plus on exact ties.
      if (p > best.success) {
        best = {d, a, r, 0.0, branch, p};
      }
    }
  }
  if (!std::isfinite(best.success)) {
    throw std::runtime_error("no feasible (r, t) in the scan range");
  }

  // Golden-section refinement around the winning grid point, branch fixed.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best.r - kGridStep;
  double hi = best.r + kGridStep;
  double c = hi - gr * (hi - lo);
  double e = lo + gr * (hi - lo);
  double fc = branch_objective(d, a, c, best.branch);
  double fe = branch_objective(d, a, e, best.branch);
  while (hi - lo > kRefineTol) {
    if (fc > fe) {
      hi = e;
      e = c;
      fe = fc;
      c = hi - gr * (hi - lo);
      fc = branch_objective(d, a, c, best.branch);
    } else {
      lo = c;
      c = e;
      fc = fe;
      e = lo + gr * (hi - lo);
      fe = branch_objective(d, a, e, best.branch);
    }
  }
  const double r_opt = 0.5 * (lo + hi);
  const double p_opt = branch_objective(d, a, r_opt, best.branch);
  if (p_opt >= best.success) {
    best.r = r_opt;
    best.success = p_opt;
  }
  best.t = root_for_branch(d, a, best.r, best.branch).value();

  // When the optimum sits on the feasibility boundary the discriminant
  // vanishes there and the root formula loses half its digits. Locate the
  // sign change of the discriminant in r by bisection and use the double
  // root t = -B/(2A) at the boundary.
  const auto discriminant = [&](double r) {
    const auto [A, B, C] = quadratic_coeffs(d, a, r);
    return B * B - 4.0 * A * C;
  };
  for (int direction : {-1, +1}) {
    double feasible = best.r;
    double infeasible = best.r + direction * 2.0 * kGridStep;
    if (discriminant(feasible) < 0.0 || discriminant(infeasible) >= 0.0) continue;
    for (int iter = 0; iter < 100 && infeasible - feasible != 0.0; ++iter) {
      const double mid = 0.5 * (feasible + infeasible);
      if (mid == feasible || mid == infeasible) break;
      (discriminant(mid) >= 0.0 ? feasible : infeasible) = mid;
    }
    const auto [A, B, C] = quadratic_coeffs(d, a, feasible);
    if (std::abs(A) < kDegenerateA) continue;
    const double t_boundary = -B / (2.0 * A);
    const double p_boundary = objective(d, a, feasible, t_boundary);
    if (p_boundary > best.success) {
      best.r = feasible;
      best.t = t_boundary;
      best.success = p_boundary;
    }
  }
  best.success = direct_success(d, a, best.r, best.t);
  return best;
}

Family success3(int d) {
  if (d < 2) throw std::invalid_argument("dimension must be >= 2");
  Family family;
  family.d = d;
  family.per_a.reserve(d);
  double sum = 0.0;
  double worst = 1.0;
  for (int a = 0; a < d; ++a) {
    OptimizedAnsatz opt = optimize_base(d, a);
    sum += opt.success;
    worst = std::min(worst, opt.success);
    family.per_a.push_back(opt);
  }
  family.average = sum / d;
  family.worst = worst;
  return family;
}

int base_index(int d, int x0, int x1, int x2) {
  const int delta = phase_delta(d);
  const int raw = (x2 - x1 + (1 + delta) * x0) % d;
  return (raw + d) % d;
}

Ket apply_xz(const Ket& psi, int x_power, int z_power) {
  const int d = int(psi.size());
  Ket out(d);
  for (int k = 0; k < d; ++k) {
    const Complex phase =
        std::polar(1.0, 2.0 * std::numbers::pi * double(k) * double(z_power) / d);
    out[(k + x_power) % d] = phase * psi[k];
  }
  return out;
}

Ket encode3(const Family& family, int x0, int x1, int x2) {
  const int d = family.d;
  if (x0 < 0 || x0 >= d || x1 < 0 || x1 >= d || x2 < 0 || x2 >= d) {
    throw std::invalid_argument("encoded symbol out of range");
  }
  const OptimizedAnsatz& base = family.per_a[base_index(d, x0, x1, x2)];
  return apply_xz(base_state(d, base.a, base.r, base.t), x0, x1);
}

}  // namespace qrac::q3

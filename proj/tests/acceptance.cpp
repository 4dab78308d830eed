// Acceptance suite: one line per criterion, non-zero exit on any failure.

#include <cmath>
#include <cstdio>
#include <random>
#include <tuple>
#include <vector>

#include "qrac/classical.hpp"
#include "qrac/experiment.hpp"
#include "qrac/qrac2.hpp"
#include "qrac/qrac3.hpp"
#include "qrac/seesaw.hpp"

using namespace qrac;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, name);
  if (!ok) ++failures;
}

bool closed_forms_exact() {
  using classical::BigRational;
  for (int d = 2; d <= 20; ++d) {
    const BigRational p2 = classical::classical_success(2, d).exact;
    const BigRational p3 = classical::classical_success(3, d).exact;
    if (p2 != BigRational(d + 1, 2 * d)) return false;
    if (p3 != BigRational(d * d + 3 * d - 1, 3 * d * d)) return false;
  }
  return true;
}

bool table1_classical_column() {
  const std::vector<std::tuple<int, double, double>> rows = {
      {2, 0.75, 5e-4},   {3, 0.593, 5e-4},  {4, 0.4961, 5e-5},
      {5, 0.4291, 5e-5}, {7, 0.3420, 5e-5}, {8, 0.3118, 5e-5}};
  for (const auto& [d, printed, tol] : rows) {
    if (std::abs(classical::classical_success(d + 1, d).value - printed) > tol) {
      return false;
    }
  }
  return true;
}

bool oracle_equivalence() {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
    if (classical::brute_force_optimal(n, d).success.exact !=
        classical::classical_success(n, d).exact) {
      return false;
    }
  }
  return true;
}

bool two_symbol_family() {
  for (int d = 2; d <= 32; ++d) {
    const auto sim = q2::success2_simulated(d);
    const double closed = q2::success2_closed(d);
    if (std::abs(sim.average - closed) > 1e-10) return false;
    if (std::abs(sim.worst - closed) > 1e-10) return false;
  }
  int best_d = 2;
  double best_ratio = 0.0;
  for (int d = 2; d <= 40; ++d) {
    const double ratio = q2::advantage2(d);
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best_d = d;
    }
  }
  if (best_d != 6) return false;
  if (std::abs(best_ratio - (6.0 + std::sqrt(6.0)) / 7.0) > 1e-6) return false;
  const double gap = q2::success2_closed(4) - classical::classical_success(2, 4).value;
  return std::abs(gap - 0.125) <= 1e-12;
}

bool three_symbol_family() {
  if (std::abs(q3::success3(2).average - 0.7887) > 5e-4) return false;
  if (std::abs(q3::success3(3).average - 0.6971) > 5e-4) return false;
  int best_d = 2;
  double best_ratio = 0.0;
  for (int d = 2; d <= 20; ++d) {
    const double ratio =
        q3::success3(d).average / classical::classical_success(3, d).value;
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best_d = d;
    }
  }
  return best_d == 13 && std::abs(best_ratio - 1.224) <= 2e-3;
}

bool symmetry_and_orbits() {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> rdist(-3.0, 3.0);
  int valid = 0;
  while (valid < 1000) {
    const int d = std::uniform_int_distribution<int>(2, 8)(rng);
    const int a = std::uniform_int_distribution<int>(0, d - 1)(rng);
    const double r = rdist(rng);
    for (double t : q3::t_solutions(d, a, r)) {
      if (q3::norm_squared(d, a, r, t) < 1e-6) continue;
      const Ket psi = q3::base_state(d, a, r, t);
      const double p1 = outcome_prob(psi, fourier_basis(d), 0);
      const double p2 = outcome_prob(psi, third_mub(d), a);
      if (std::abs(p1 - p2) > 1e-10) return false;
      ++valid;
    }
  }

  for (int d = 2; d <= 5; ++d) {
    const q3::Family family = q3::success3(d);
    const Basis comp = computational_basis(d);
    const Basis fourier = fourier_basis(d);
    const Basis third = third_mub(d);
    const int delta = phase_delta(d);
    for (int a = 0; a < d; ++a) {
      const Ket base =
          q3::base_state(d, a, family.per_a[a].r, family.per_a[a].t);
      const double p0 = outcome_prob(base, comp, 0);
      const double p1 = outcome_prob(base, fourier, 0);
      const double p2 = outcome_prob(base, third, a);
      for (int alpha = 0; alpha < d; ++alpha) {
        for (int beta = 0; beta < d; ++beta) {
          const int x2 = ((beta + a - (1 + delta) * alpha) % d + d) % d;
          const Ket moved = q3::encode3(family, alpha, beta, x2);
          if (std::abs(outcome_prob(moved, comp, alpha) - p0) > 1e-9) return false;
          if (std::abs(outcome_prob(moved, fourier, beta) - p1) > 1e-9) return false;
          if (std::abs(outcome_prob(moved, third, x2) - p2) > 1e-9) return false;
        }
      }
    }
  }
  return true;
}

bool monotone(const std::vector<std::vector<double>>& traces) {
  for (const auto& trace : traces) {
    for (std::size_t k = 1; k < trace.size(); ++k) {
      if (trace[k] < trace[k - 1] - 1e-12) return false;
    }
  }
  return true;
}

bool seesaw_bounds() {
  for (int d = 2; d <= 5; ++d) {
    const auto report = seesaw::run(2, d, 50, 300, 1000 + d);
    const double closed = q2::success2_closed(d);
    if (report.best < closed - 1e-3) return false;
    if (report.best > closed + 1e-6) return false;
    if (!monotone(report.traces)) return false;
  }
  const auto report33 = seesaw::run(3, 3, 100, 300, 33);
  return report33.best >= 0.6971 - 1e-3 && monotone(report33.traces);
}

bool experiment_analysis() {
  const auto records = experiment::embedded_table2();
  const auto analysis = experiment::analyze(records);
  if (std::abs(analysis.mean - 0.754) > 0.005) return false;
  if (!analysis.classical_bound_violated) return false;
  for (int x0 = 0; x0 < 4; ++x0) {
    for (int x1 = 0; x1 < 4; ++x1) {
      for (int q : {0, 1}) {
        if (std::abs(experiment::ideal_success(x0, x1, q) - 0.75) > 1e-12) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  report(1, "exact classical closed forms for n=2,3, d in [2,20]", closed_forms_exact());
  report(2, "classical column of the reference qudit-code table", table1_classical_column());
  report(3, "brute-force oracle matches the partition formula", oracle_equivalence());
  report(4, "two-symbol family: closed form, argmax d=6, gap at d=4", two_symbol_family());
  report(5, "three-symbol family: d=2,3 values and argmax d=13", three_symbol_family());
  report(6, "question symmetry and orbit invariance", symmetry_and_orbits());
  report(7, "see-saw lower bounds with monotone traces", seesaw_bounds());
  report(8, "measured-table analysis and ideal success", experiment_analysis());
  return failures;
}

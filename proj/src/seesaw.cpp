#include "qrac/seesaw.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "qrac/qrac2.hpp"

namespace qrac::seesaw {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kEigTol = 1e-10;
constexpr double kCompletenessTol = 1e-9;
constexpr double kSpectralCut = 1e-12;
constexpr double kConvergenceTol = 1e-10;

int num_strings(int n, int d) {
  int total = 1;
  for (int i = 0; i < n; ++i) total *= d;
  return total;
}

int digit(int rank, int position, int n, int d) {
  for (int i = n - 1; i > position; --i) rank /= d;
  return rank % d;
}

// Score operators S^y_b = sum_{x : x_y = b} |psi_x><psi_x| / (n d^n).
std::vector<Operator> score_operators(const Strategy& s, int question) {
  const int total = num_strings(s.n, s.d);
  std::vector<Operator> scores(s.d, Operator::Zero(s.d, s.d));
  const double weight = 1.0 / (double(s.n) * total);
  for (int x = 0; x < total; ++x) {
    const int b = digit(x, question, s.n, s.d);
    scores[b] += weight * (s.states[x] * s.states[x].adjoint());
  }
  return scores;
}

double contribution(const std::vector<Operator>& scores,
                    const std::vector<Operator>& povm) {
  double sum = 0.0;
  for (std::size_t b = 0; b < scores.size(); ++b) {
    sum += (scores[b] * povm[b]).trace().real();
  }
  return sum;
}

// Projectors onto the strictly positive / rest eigenspaces of S0 - S1,
// with the kernel assigned to outcome 0.
std::vector<Operator> helstrom_povm(const Operator& s0, const Operator& s1) {
  const int d = int(s0.rows());
  Eigen::SelfAdjointEigenSolver<Operator> eig(s0 - s1);
  if (eig.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  Operator m0 = Operator::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    if (eig.eigenvalues()[i] >= -kSpectralCut) {
      const Ket v = eig.eigenvectors().col(i);
      m0 += v * v.adjoint();
    }
  }
  return {m0, Operator::Identity(d, d) - m0};
}

// Square-root measurement M_b = T^{-1/2} S_b T^{-1/2} on the support of
// T = sum_b S_b, with the complement projector added to outcome 0.
std::vector<Operator> sqrt_measurement_povm(const std::vector<Operator>& scores) {
  const int d = int(scores.front().rows());
  Operator total = Operator::Zero(d, d);
  for (const auto& s : scores) total += s;

  Eigen::SelfAdjointEigenSolver<Operator> eig(total);
  if (eig.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  Operator inv_sqrt = Operator::Zero(d, d);
  Operator support = Operator::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const double lambda = eig.eigenvalues()[i];
    if (lambda > kSpectralCut) {
      const Ket v = eig.eigenvectors().col(i);
      inv_sqrt += (1.0 / std::sqrt(lambda)) * (v * v.adjoint());
      support += v * v.adjoint();
    }
  }
  std::vector<Operator> povm;
  povm.reserve(scores.size());
  for (const auto& s : scores) povm.push_back(inv_sqrt * s * inv_sqrt);
  povm[0] += Operator::Identity(d, d) - support;
  return povm;
}

// Fixed-point refinement toward the POVM maximizing sum_b tr(S_b M_b):
// M_b <- L^{-1/2} S_b M_b S_b L^{-1/2} with L = sum_b S_b M_b S_b.
// Returns the best iterate visited.
std::vector<Operator> refine_ml_povm(const std::vector<Operator>& scores,
                                     std::vector<Operator> povm, int max_rounds) {
  const int d = int(scores.front().rows());
  std::vector<Operator> best = povm;
  double best_value = contribution(scores, povm);
  for (int round = 0; round < max_rounds; ++round) {
    Operator lagrangian = Operator::Zero(d, d);
    std::vector<Operator> conjugated(scores.size());
    for (std::size_t b = 0; b < scores.size(); ++b) {
      conjugated[b] = scores[b] * povm[b] * scores[b];
      lagrangian += conjugated[b];
    }
    Eigen::SelfAdjointEigenSolver<Operator> eig((lagrangian + lagrangian.adjoint()) / 2.0);
    if (eig.info() != Eigen::Success) break;
    Operator inv_sqrt = Operator::Zero(d, d);
    Operator support = Operator::Zero(d, d);
    for (int i = 0; i < d; ++i) {
      const double lambda = eig.eigenvalues()[i];
      if (lambda > kSpectralCut) {
        const Ket v = eig.eigenvectors().col(i);
        inv_sqrt += (1.0 / std::sqrt(lambda)) * (v * v.adjoint());
        support += v * v.adjoint();
      }
    }
    for (std::size_t b = 0; b < scores.size(); ++b) {
      Operator m = inv_sqrt * conjugated[b] * inv_sqrt;
      povm[b] = (m + m.adjoint()) / 2.0;
    }
    povm[0] += Operator::Identity(d, d) - support;

    const double value = contribution(scores, povm);
    if (value > best_value) {
      best_value = value;
      best = povm;
    } else if (value < best_value - 1e-12) {
      break;
    }
  }
  return best;
}

Ket random_unit_ket(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Ket psi(d);
  for (int k = 0; k < d; ++k) psi[k] = Complex(gauss(rng), gauss(rng));
  psi.normalize();
  return psi;
}

Operator random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Operator g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<Operator> qr(g);
  return Operator(qr.householderQ());
}

}  // namespace

void validate(const Strategy& s) {
  if (s.n < 1 || s.d < 2) throw std::invalid_argument("invalid n or d");
  const int total = num_strings(s.n, s.d);
  if (int(s.states.size()) != total) throw std::invalid_argument("wrong state count");
  for (const Ket& psi : s.states) {
    if (psi.size() != s.d || std::abs(psi.norm() - 1.0) > 1e-9) {
      throw std::invalid_argument("state not unit norm");
    }
  }
  if (int(s.povms.size()) != s.n) throw std::invalid_argument("wrong POVM count");
  for (const auto& povm : s.povms) {
    if (int(povm.size()) != s.d) throw std::invalid_argument("wrong outcome count");
    Operator sum = Operator::Zero(s.d, s.d);
    for (const Operator& m : povm) {
      if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermTol) {
        throw std::invalid_argument("POVM element not Hermitian");
      }
      Eigen::SelfAdjointEigenSolver<Operator> eig(m);
      if (eig.eigenvalues().minCoeff() < -kEigTol) {
        throw std::invalid_argument("POVM element not positive semidefinite");
      }
      sum += m;
    }
    if ((sum - Operator::Identity(s.d, s.d)).cwiseAbs().maxCoeff() > kCompletenessTol) {
      throw std::invalid_argument("POVM does not sum to identity");
    }
  }
}

double objective(const Strategy& s) {
  const int total = num_strings(s.n, s.d);
  double sum = 0.0;
  for (int x = 0; x < total; ++x) {
    for (int y = 0; y < s.n; ++y) {
      const Operator& m = s.povms[y][digit(x, y, s.n, s.d)];
      sum += (s.states[x].adjoint() * m * s.states[x])(0, 0).real();
    }
  }
  return sum / (double(s.n) * total);
}

Strategy state_update(Strategy s) {
  const int total = num_strings(s.n, s.d);
  for (int x = 0; x < total; ++x) {
    Operator r = Operator::Zero(s.d, s.d);
    for (int y = 0; y < s.n; ++y) r += s.povms[y][digit(x, y, s.n, s.d)];
    Eigen::SelfAdjointEigenSolver<Operator> eig(r / double(s.n));
    if (eig.info() != Eigen::Success) {
      throw std::runtime_error("eigendecomposition failed");
    }
    s.states[x] = eig.eigenvectors().col(s.d - 1);  // top eigenvector
  }
  return s;
}

Strategy measurement_update(Strategy s) {
  for (int y = 0; y < s.n; ++y) {
    const std::vector<Operator> scores = score_operators(s, y);
    std::vector<Operator> proposal;
    try {
      if (s.d == 2) {
        proposal = helstrom_povm(scores[0], scores[1]);
      } else {
        // The square-root measurement alone is a poor fixed point of the
        // alternation for d >= 3; refine it and the current POVM with the
        // discrimination fixed-point iteration and keep the better one.
        proposal = refine_ml_povm(scores, sqrt_measurement_povm(scores), 200);
        std::vector<Operator> from_current = refine_ml_povm(scores, s.povms[y], 200);
        if (contribution(scores, from_current) > contribution(scores, proposal)) {
          proposal = std::move(from_current);
        }
      }
    } catch (const std::runtime_error&) {
      continue;  // keep the previous POVM
    }
    if (contribution(scores, proposal) >= contribution(scores, s.povms[y])) {
      s.povms[y] = std::move(proposal);
    }
  }
  return s;
}

Strategy mub_strategy2(int d) {
  Strategy s;
  s.n = 2;
  s.d = d;
  s.states.reserve(d * d);
  for (int x0 = 0; x0 < d; ++x0) {
    for (int x1 = 0; x1 < d; ++x1) s.states.push_back(q2::encode2(d, x0, x1));
  }
  for (const Basis& basis : {computational_basis(d), fourier_basis(d)}) {
    std::vector<Operator> povm;
    povm.reserve(d);
    for (const Ket& b : basis.kets) povm.push_back(b * b.adjoint());
    s.povms.push_back(std::move(povm));
  }
  return s;
}

Report run(int n, int d, int restarts, int max_iters, std::uint64_t seed) {
  if (n < 1 || d < 2) throw std::invalid_argument("invalid n or d");
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (max_iters < 0) throw std::invalid_argument("max_iters must be >= 0");

  Report report;
  report.restarts = restarts;
  report.seed = seed;
  report.best = -1.0;

  const int total = num_strings(n, d);
  for (int restart = 0; restart < restarts; ++restart) {
    std::mt19937_64 rng(seed + std::uint64_t(restart));

    Strategy s;
    s.n = n;
    s.d = d;
    s.states.reserve(total);
    for (int x = 0; x < total; ++x) s.states.push_back(random_unit_ket(d, rng));
    const Basis comp = computational_basis(d);
    for (int y = 0; y < n; ++y) {
      const Operator u = random_unitary(d, rng);
      std::vector<Operator> povm;
      povm.reserve(d);
      for (const Ket& b : comp.kets) {
        const Ket rotated = u * b;
        povm.push_back(rotated * rotated.adjoint());
      }
      s.povms.push_back(std::move(povm));
    }

    std::vector<double> trace{objective(s)};
    int iters = 0;
    for (; iters < max_iters; ++iters) {
      s = state_update(std::move(s));
      s = measurement_update(std::move(s));
      const double obj = objective(s);
      const bool converged = std::abs(obj - trace.back()) < kConvergenceTol;
      trace.push_back(obj);
      if (converged) {
        ++iters;
        break;
      }
    }

    if (trace.back() > report.best) {
      report.best = trace.back();
      report.iterations = iters;
      report.best_strategy = s;
    }
    report.traces.push_back(std::move(trace));
  }
  validate(report.best_strategy);
  return report;
}

}  // namespace qrac::seesaw

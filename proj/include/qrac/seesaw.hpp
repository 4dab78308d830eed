#pragma once

#include <cstdint>
#include <vector>

#include "qrac/linalg.hpp"

namespace qrac::seesaw {

/// d^n encoding states plus one d-outcome POVM per question.
struct Strategy {
  int n = 0;
  int d = 0;
  std::vector<Ket> states;                   // indexed by string rank, base d
  std::vector<std::vector<Operator>> povms;  // [question][outcome]
};

// Throws std::invalid_argument when norms, Hermiticity, positivity or
// completeness are violated beyond tolerance.
void validate(const Strategy& s);

// (1/(n d^n)) sum_x sum_y <psi_x| M^y_{x_y} |psi_x>
double objective(const Strategy& s);

// Replace each state by the top eigenvector of its responsibility
// operator (1/n) sum_y M^y_{x_y}. Never decreases the objective.
Strategy state_update(Strategy s);

// Helstrom update for two outcomes, square-root measurement otherwise;
// a proposal that lowers the objective is discarded.
Strategy measurement_update(Strategy s);

// The n=2 MUB family as an explicit strategy (encoding states plus
// computational and Fourier projective measurements).
Strategy mub_strategy2(int d);

struct Report {
  double best = 0.0;
  int iterations = 0;  // of the winning restart
  int restarts = 0;
  std::uint64_t seed = 0;
  std::vector<std::vector<double>> traces;  // objective per iteration, per restart
  Strategy best_strategy;
};

// Random restarts of alternating state / measurement updates. Restart i
// uses sub-seed seed + i; identical arguments give identical reports.
Report run(int n, int d, int restarts, int max_iters, std::uint64_t seed);

}  // namespace qrac::seesaw

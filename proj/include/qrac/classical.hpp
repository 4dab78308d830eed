#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qrac::classical {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Non-increasing positive parts summing to n.
using Partition = std::vector<int>;

// All partitions of n, each once, in lexicographically decreasing order.
std::vector<Partition> partitions(int n);

// Number of length-n strings over a d-letter alphabet whose symbol
// frequency multiset equals p. Zero when p has more parts than d.
BigInt count_strings(const Partition& p, int d);

struct SuccessValue {
  BigRational exact;
  double value = 0.0;
};

// Average success probability of majority encoding / identity decoding,
// computed exactly from the partition sum.
SuccessValue classical_success(int n, int d);

// Closed forms for n = 2 and n = 3.
double closed_form_success(int n, int d);

// Direct simulation over all d^n strings; must agree with
// classical_success. Guarded at d^n <= 1e8.
double majority_strategy_success(int n, int d);

/// Deterministic encoding table plus per-question decoding tables.
struct ClassicalStrategy {
  int n = 0;
  int d = 0;
  std::vector<int> encode;               // indexed by string rank, base-d
  std::vector<std::vector<int>> decode;  // n tables of d entries
};

struct BruteForceResult {
  SuccessValue success;
  ClassicalStrategy strategy;
};

// Exhaustive search over all d^(d^n) encoding tables with optimal
// plurality decoding. Supported: (2,2), (3,2), (2,3).
BruteForceResult brute_force_optimal(int n, int d);

}  // namespace qrac::classical

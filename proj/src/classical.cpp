#include "qrac/classical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace qrac::classical {

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt ipow(int base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void emit_partitions(int remaining, int max_part, Partition& acc,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    acc.push_back(part);
    emit_partitions(remaining - part, part, acc, out);
    acc.pop_back();
  }
}

// Digits of the string with the given rank, most significant first.
std::vector<int> string_digits(std::uint64_t rank, int n, int d) {
  std::vector<int> digits(n);
  for (int i = n - 1; i >= 0; --i) {
    digits[i] = int(rank % d);
    rank /= d;
  }
  return digits;
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<Partition> out;
  Partition acc;
  emit_partitions(n, n, acc, out);
  return out;
}

BigInt count_strings(const Partition& p, int d) {
  if (d < 1) throw std::invalid_argument("alphabet size must be >= 1");
  const int m = int(p.size());
  if (m > d) return 0;
  int n = 0;
  for (int part : p) n += part;

  BigInt count = factorial(n);
  for (int part : p) count /= factorial(part);

  // Divide by C(l)! for each distinct part value l.
  std::map<int, int> multiplicity;
  for (int part : p) ++multiplicity[part];
  for (const auto& [part, times] : multiplicity) count /= factorial(times);

  for (int i = 0; i < m; ++i) count *= (d - i);
  return count;
}

SuccessValue classical_success(int n, int d) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (d < 2) throw std::invalid_argument("d must be >= 2");

  BigInt weighted = 0;
  BigInt total = 0;
  for (const Partition& p : partitions(n)) {
    const BigInt count = count_strings(p, d);
    weighted += BigInt(p.front()) * count;  // max part is the first element
    total += count;
  }
  if (total != ipow(d, n)) {
    throw std::logic_error("partition counts do not sum to d^n");
  }
  BigRational exact(weighted, BigInt(n) * ipow(d, n));
  return {exact, exact.convert_to<double>()};
}

double closed_form_success(int n, int d) {
  if (d < 2) throw std::invalid_argument("d must be >= 2");
  const double dd = d;
  if (n == 2) return 0.5 * (1.0 + 1.0 / dd);
  if (n == 3) return (1.0 + 3.0 / dd - 1.0 / (dd * dd)) / 3.0;
  throw std::invalid_argument("closed form only available for n = 2, 3");
}

double majority_strategy_success(int n, int d) {
  if (n < 1 || d < 2) throw std::invalid_argument("invalid n or d");
  double size = std::pow(double(d), double(n));
  if (size > 1e8) throw std::invalid_argument("instance too large for enumeration");
  const std::uint64_t total = std::uint64_t(size + 0.5);

  std::uint64_t hits = 0;
  std::vector<int> digits(n, 0);
  std::vector<int> freq(d);
  for (std::uint64_t s = 0; s < total; ++s) {
    std::fill(freq.begin(), freq.end(), 0);
    for (int i = 0; i < n; ++i) ++freq[digits[i]];
    // Majority symbol, lowest value on ties; Bob echoes it for every question,
    // so he is right exactly freq[sent] times out of n.
    const int sent = int(std::max_element(freq.begin(), freq.end()) - freq.begin());
    hits += freq[sent];

    for (int i = n - 1; i >= 0; --i) {
      if (++digits[i] < d) break;
      digits[i] = 0;
    }
  }
  return double(hits) / (double(n) * double(total));
}

BruteForceResult brute_force_optimal(int n, int d) {
  if (n < 1 || d < 2) throw std::invalid_argument("invalid n or d");
  const bool supported = (n == 2 && d == 2) || (n == 3 && d == 2) || (n == 2 && d == 3);
  if (!supported) throw std::invalid_argument("instance too large for exhaustive search");

  const int num_strings = int(std::pow(double(d), double(n)) + 0.5);
  std::vector<std::vector<int>> digits(num_strings);
  for (int s = 0; s < num_strings; ++s) digits[s] = string_digits(s, n, d);

  std::vector<int> encoding(num_strings, 0);
  std::vector<int> best_encoding;
  std::uint64_t best_hits = 0;

  // counts[y][m][v]: over strings with enc = m, how often digit y equals v.
  std::vector<int> counts(std::size_t(n) * d * d);
  while (true) {
    std::fill(counts.begin(), counts.end(), 0);
    for (int s = 0; s < num_strings; ++s) {
      const int m = encoding[s];
      for (int y = 0; y < n; ++y) ++counts[(std::size_t(y) * d + m) * d + digits[s][y]];
    }
    std::uint64_t hits = 0;
    for (int y = 0; y < n; ++y) {
      for (int m = 0; m < d; ++m) {
        const int* row = &counts[(std::size_t(y) * d + m) * d];
        hits += *std::max_element(row, row + d);
      }
    }
    if (hits > best_hits) {
      best_hits = hits;
      best_encoding = encoding;
    }

    int pos = num_strings - 1;
    while (pos >= 0 && ++encoding[pos] == d) encoding[pos--] = 0;
    if (pos < 0) break;
  }

  // Rebuild the plurality decoding for the winning encoding (lowest value wins).
  ClassicalStrategy strategy{n, d, best_encoding, std::vector<std::vector<int>>(n, std::vector<int>(d, 0))};
  std::fill(counts.begin(), counts.end(), 0);
  for (int s = 0; s < num_strings; ++s) {
    const int m = best_encoding[s];
    for (int y = 0; y < n; ++y) ++counts[(std::size_t(y) * d + m) * d + digits[s][y]];
  }
  for (int y = 0; y < n; ++y) {
    for (int m = 0; m < d; ++m) {
      const int* row = &counts[(std::size_t(y) * d + m) * d];
      strategy.decode[y][m] = int(std::max_element(row, row + d) - row);
    }
  }

  BigRational exact(BigInt(best_hits), BigInt(n) * ipow(d, n));
  return {{exact, exact.convert_to<double>()}, std::move(strategy)};
}

}  // namespace qrac::classical

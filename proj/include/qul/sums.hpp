#pragma once

#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "qul/factorization.hpp"

namespace qul {

// Limits of the normalized ratios: S/(N ln^2 N) and G/(N ln N) tend to
// 6/pi^2, H/ln^2 N tends to 3/pi^2. Natural logarithm throughout; the
// constants come from 1/zeta(2).
inline constexpr long double kTargetRatioS =
    6.0L / (std::numbers::pi_v<long double> * std::numbers::pi_v<long double>);
inline constexpr long double kTargetRatioG = kTargetRatioS;
inline constexpr long double kTargetRatioH = kTargetRatioS / 2.0L;

// S(N) = sum_{2 <= n <= N} d(n^2 - 1). The n = 1 term is excluded (d(0) is
// undefined). Requires n >= 2 and n + 1 <= sieve.limit(). The range may be
// split across `threads` workers; exact integer partial sums make the
// result independent of the partition.
uint64_t sum_s_direct(uint64_t n, const SpfSieve& sieve, unsigned threads = 1);

// Same value via the congruence-count rewrite
//   S(N) = 2 * sum_{d < N} (Q(N, d) - Q(d, d)),
// using Q(d, d) = g(d). Requires n >= 2 and n <= sieve.limit().
uint64_t sum_s_congruence(uint64_t n, const SpfSieve& sieve);

// Same value with divisor counts taken by trial division up to
// sqrt(n^2 - 1), no sieve involved. O(N^2); keep n in the low thousands.
uint64_t sum_s_oracle(uint64_t n);

// G(N) = sum_{d < N} g(d). Strict upper bound, matching the asymptotic
// statement. Requires n >= 1 and n <= sieve.limit().
uint64_t sum_g(uint64_t n, const SpfSieve& sieve);

// H(N) = sum_{d < N} g(d)/d, accumulated in ascending d with Neumaier
// compensation, so results are reproducible bit for bit.
long double sum_h(uint64_t n, const SpfSieve& sieve);

// Checks G(N) <= sum_{d < N} 2^omega(d) as an exact integer comparison.
bool growth_bound_check(uint64_t n, const SpfSieve& sieve);

struct ConvergenceRow {
  uint64_t n;
  uint64_t s;           // S(n), exact
  uint64_t g;           // G(n), exact
  long double h;        // H(n)
  long double ratio_s;  // s / (n ln^2 n)
  long double ratio_g;  // g / (n ln n)
  long double ratio_h;  // h / ln^2 n
};

// One row per requested N. Requires each N >= 2 and max(N) + 1 <= limit.
std::vector<ConvergenceRow> convergence_table(std::span<const uint64_t> ns,
                                              const SpfSieve& sieve,
                                              unsigned threads = 1);

}  // namespace qul

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qul/factorization.hpp"

namespace qul {

// Exact integer square root test: returns k with k*k == m, or nullopt.
// The float seed is corrected by integer comparison, so results are exact
// over the whole 64-bit range.
std::optional<uint64_t> perfect_square_root(uint64_t m);

// One pair {a, b} with a < b and a*b + 1 = n^2.
struct DioPair {
  uint64_t a;
  uint64_t b;
  uint64_t n;

  friend bool operator==(const DioPair&, const DioPair&) = default;
};

// Number of pairs {a, b} of positive integers, a < b, with a*b + 1 a
// perfect square n^2, 2 <= n <= N. Each n contributes d(n^2 - 1)/2 pairs
// (divisors below sqrt paired with their cofactors); d(n^2 - 1) is even
// because n^2 - 1 is never a square for n >= 2, which is checked at
// runtime. Requires n >= 2 and N + 1 <= sieve.limit().
uint64_t count_pairs(uint64_t n, const SpfSieve& sieve);

// Same count by scanning all a < b with a*b + 1 <= N^2 and testing
// squareness directly. O(N^2 log N); keep N small (a few hundred).
uint64_t count_pairs_oracle(uint64_t n);

// All pairs, sorted by (n, a). Size equals count_pairs(N).
std::vector<DioPair> list_pairs(uint64_t n, const SpfSieve& sieve);

}  // namespace qul

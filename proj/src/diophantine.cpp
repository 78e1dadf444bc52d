#include "qul/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qul {

namespace {

using u128 = unsigned __int128;

uint64_t isqrt(uint64_t m) {
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(m)));
  if (r > UINT32_MAX) r = UINT32_MAX;
  while (u128{r} * r > m) --r;
  while (u128{r + 1} * (r + 1) <= m) ++r;
  return r;
}

}  // namespace

std::optional<uint64_t> perfect_square_root(uint64_t m) {
  const uint64_t r = isqrt(m);
  if (r * r == m) return r;
  return std::nullopt;
}

uint64_t count_pairs(uint64_t n, const SpfSieve& sieve) {
  if (n < 2) throw std::invalid_argument("count_pairs: N must be >= 2");
  if (n + 1 > sieve.limit()) throw std::out_of_range("count_pairs: N + 1 exceeds sieve limit");
  uint64_t total = 0;
  for (uint64_t k = 2; k <= n; ++k) {
    const uint64_t dc = divisor_count(sieve.factorize_n2_minus_1(k));
    if (dc % 2 != 0)
      throw std::logic_error("count_pairs: d(n^2-1) odd, n^2-1 would be a square");
    total += dc / 2;
  }
  return total;
}

uint64_t count_pairs_oracle(uint64_t n) {
  if (n < 2) throw std::invalid_argument("count_pairs_oracle: N must be >= 2");
  const uint64_t bound = n * n;  // a*b + 1 <= N^2
  uint64_t count = 0;
  for (uint64_t a = 1; a * (a + 1) + 1 <= bound; ++a) {
    for (uint64_t b = a + 1; a * b + 1 <= bound; ++b) {
      const auto root = perfect_square_root(a * b + 1);
      if (root && *root >= 2) ++count;
    }
  }
  return count;
}

std::vector<DioPair> list_pairs(uint64_t n, const SpfSieve& sieve) {
  if (n < 2) throw std::invalid_argument("list_pairs: N must be >= 2");
  if (n + 1 > sieve.limit()) throw std::out_of_range("list_pairs: N + 1 exceeds sieve limit");
  std::vector<DioPair> pairs;
  std::vector<uint64_t> divisors;
  for (uint64_t k = 2; k <= n; ++k) {
    const uint64_t m = k * k - 1;
    const Factorization f = sieve.factorize_n2_minus_1(k);
    divisors.assign(1, 1);
    for (const auto& pp : f.factors()) {
      const std::size_t count = divisors.size();
      uint64_t power = 1;
      for (uint32_t e = 1; e <= pp.exponent; ++e) {
        power *= pp.prime;
        for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * power);
      }
    }
    const std::size_t before = pairs.size();
    for (const uint64_t d : divisors) {
      if (d >= k) continue;  // keep the smaller element of each pair
      const uint64_t cofactor = m / d;
      if (d == cofactor) throw std::logic_error("list_pairs: a == b, n^2-1 would be a square");
      pairs.push_back({d, cofactor, k});
    }
    std::sort(pairs.begin() + static_cast<std::ptrdiff_t>(before), pairs.end(),
              [](const DioPair& x, const DioPair& y) { return x.a < y.a; });
  }
  return pairs;
}

}  // namespace qul

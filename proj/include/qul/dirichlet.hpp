#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qul/factorization.hpp"

namespace qul {

// Riemann zeta on the real axis, s > 1, by Euler-Maclaurin:
//   zeta(s) = sum_{n < M} n^-s + M^(1-s)/(s-1) + M^-s/2
//           + s/(12 M^(s+1)) - s(s+1)(s+2)/(720 M^(s+3))
// with M = precision_terms. The truncation error is below the first
// omitted Bernoulli term, s(s+1)(s+2)(s+3)(s+4) / (30240 M^(s+5)), which
// at the default M = 10^4 is far under 1e-12 for every s >= 1.001.
// Throws std::invalid_argument for s <= 1.
long double zeta_real(long double s, uint32_t precision_terms = 10000);

// The prime-2 factor of the Euler product of F:
//   1 + 1/2^s + 2/4^s + 4/(8^s - 4^s),   s > 1.
long double euler_factor_2(long double s);

// Closed form of F(s) = sum_{n >= 1} g(n)/n^s:
//   euler_factor_2(s) * (1 - 2^-s)/(1 + 2^-s) * zeta(s)^2 / zeta(2s).
// Throws std::invalid_argument for s <= 1.
long double f_closed(long double s);

// Truncated coefficient sum, sum_{n <= m} g(n) n^-s, ascending n with
// compensated accumulation. Requires m >= 1 and m <= sieve.limit().
long double f_truncated(long double s, uint64_t m, const SpfSieve& sieve);

// euler_factor_2(s) * prod over odd primes p <= prime_bound of
// (1 + p^-s)/(1 - p^-s), factors multiplied in ascending p. Converges
// upward to f_closed(s). Requires prime_bound >= 1, <= sieve.limit().
long double euler_partial_product(long double s, uint64_t prime_bound,
                                  const SpfSieve& sieve);

struct ResiduePoint {
  long double h;
  long double value;  // h^2 * F(1 + h)
};

// Evaluates h^2 * f_closed(1 + h) along the ladder; the values approach
// 1/zeta(2) = 6/pi^2 as h goes to 0, with error roughly linear in h.
// Throws std::invalid_argument if any h <= 0.
std::vector<ResiduePoint> residue_constant(std::span<const long double> h_ladder);

}  // namespace qul

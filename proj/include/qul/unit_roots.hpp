#pragma once

#include <cstdint>
#include <vector>

#include "qul/factorization.hpp"

namespace qul {

// d = 2^a * q with q odd.
struct TwoAdicSplit {
  uint32_t a;
  uint64_t q;

  friend bool operator==(const TwoAdicSplit&, const TwoAdicSplit&) = default;
};

TwoAdicSplit split_two_adic(uint64_t d);

// The full solution set of x^2 == 1 (mod modulus) with 1 <= x <= modulus,
// strictly increasing.
struct UnitRoots {
  uint64_t modulus;
  std::vector<uint64_t> roots;
};

// g(d) = 2^(omega(q) + s(a)) where d = 2^a q with q odd and
//   s(a) = 0 for a <= 1, 1 for a == 2, 2 for a >= 3.
// Requires d >= 1 and d <= sieve.limit().
uint64_t g_closed_form(uint64_t d, const SpfSieve& sieve);

// g(d) by scanning x = 1..d. O(d) per call; oracle-grade, keep d modest.
uint64_t g_bruteforce(uint64_t d);

// Explicit roots: local solutions at each prime power of d combined by CRT.
// Local sets are {1, p^k - 1} at odd p^k, and {1}, {1, 3},
// {1, 2^(k-1) - 1, 2^(k-1) + 1, 2^k - 1} at 2^k for k = 1, 2, >= 3.
// roots.size() always equals g_closed_form(d, sieve).
UnitRoots unit_roots_mod(uint64_t d, const SpfSieve& sieve);

// Q(x, d): number of 1 <= n <= x with n^2 == 1 (mod d). Exact; computed as
// sum over roots r <= x of floor((x - r)/d) + 1. x itself may exceed the
// sieve limit, only d is constrained.
uint64_t count_q(uint64_t x, uint64_t d, const SpfSieve& sieve);

// d*Q(x,d) - g(d)*x as an exact integer. A window of length d contains
// exactly g(d) solutions, so |result| <= g(d)*d always.
int64_t q_approx_error(uint64_t x, uint64_t d, const SpfSieve& sieve);

// Number of 1 <= x <= d with x^2 == r^2 (mod d), by full scan.
uint64_t g_r_bruteforce(uint64_t r, uint64_t d);

// Same count as the product of local counts over the prime powers of d.
uint64_t g_r_crt(uint64_t r, uint64_t d, const SpfSieve& sieve);

// Local count at a prime-power modulus: #{x in [1, prime_power] : x^2 ==
// r^2 (mod prime_power)}, by residue scan. For an odd prime p with p not
// dividing r this is exactly 2 (x == r and x == p^k - r).
uint64_t g_r_mod_prime_power(uint64_t r, uint64_t prime_power);

}  // namespace qul

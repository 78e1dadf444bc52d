#include "qul/unit_roots.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace qul {

namespace {

void require_d(uint64_t d, const SpfSieve& sieve) {
  if (d == 0) throw std::invalid_argument("modulus d must be positive");
  if (d > sieve.limit()) throw std::out_of_range("modulus d exceeds sieve limit");
}

uint32_t s_of_a(uint32_t a) {
  if (a <= 1) return 0;
  if (a == 2) return 1;
  return 2;
}

// Solves u*a + v*b = gcd(a, b); returns gcd.
int64_t ext_gcd(int64_t a, int64_t b, int64_t& u, int64_t& v) {
  if (b == 0) {
    u = 1;
    v = 0;
    return a;
  }
  int64_t u1, v1;
  const int64_t g = ext_gcd(b, a % b, u1, v1);
  u = v1;
  v = u1 - (a / b) * v1;
  return g;
}

// x == r1 (mod m1), x == r2 (mod m2) with gcd(m1, m2) == 1; result in
// [0, m1*m2). Moduli stay below 2^31 here so int64 products are safe.
uint64_t crt_pair(uint64_t r1, uint64_t m1, uint64_t r2, uint64_t m2) {
  int64_t u, v;
  const int64_t g = ext_gcd(static_cast<int64_t>(m1), static_cast<int64_t>(m2), u, v);
  assert(g == 1);
  (void)g;
  // t = (r2 - r1) * m1^{-1} mod m2
  int64_t diff = (static_cast<int64_t>(r2) - static_cast<int64_t>(r1)) % static_cast<int64_t>(m2);
  if (diff < 0) diff += static_cast<int64_t>(m2);
  int64_t inv = u % static_cast<int64_t>(m2);
  if (inv < 0) inv += static_cast<int64_t>(m2);
  const uint64_t t = (static_cast<uint64_t>(diff) * static_cast<uint64_t>(inv)) % m2;
  return r1 + m1 * t;
}

std::vector<uint64_t> local_unit_roots(uint64_t p, uint32_t k, uint64_t pk) {
  if (p == 2) {
    if (k == 1) return {1};
    if (k == 2) return {1, 3};
    return {1, pk / 2 - 1, pk / 2 + 1, pk - 1};
  }
  return {1, pk - 1};
}

uint64_t pow_u64(uint64_t base, uint32_t exp) {
  uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

}  // namespace

TwoAdicSplit split_two_adic(uint64_t d) {
  if (d == 0) throw std::invalid_argument("split_two_adic: d must be positive");
  const uint32_t a = static_cast<uint32_t>(std::countr_zero(d));
  return {a, d >> a};
}

uint64_t g_closed_form(uint64_t d, const SpfSieve& sieve) {
  require_d(d, sieve);
  const auto [a, q] = split_two_adic(d);
  const uint32_t w = (q == 1) ? 0 : omega(sieve.factorize(q));
  return uint64_t{1} << (w + s_of_a(a));
}

uint64_t g_bruteforce(uint64_t d) {
  if (d == 0) throw std::invalid_argument("g_bruteforce: d must be positive");
  const uint64_t target = 1 % d;
  uint64_t count = 0;
  for (uint64_t x = 1; x <= d; ++x) {
    const uint64_t sq = static_cast<uint64_t>((static_cast<unsigned __int128>(x) * x) % d);
    if (sq == target) ++count;
  }
  return count;
}

UnitRoots unit_roots_mod(uint64_t d, const SpfSieve& sieve) {
  require_d(d, sieve);
  // Fold the local solution sets together with CRT, keeping representatives
  // in [0, modulus) until the end.
  std::vector<uint64_t> roots{0};
  uint64_t modulus = 1;
  for (const auto& pp : sieve.factorize(d).factors()) {
    const uint64_t pk = pow_u64(pp.prime, pp.exponent);
    const auto locals = local_unit_roots(pp.prime, pp.exponent, pk);
    std::vector<uint64_t> next;
    next.reserve(roots.size() * locals.size());
    for (const uint64_t r : roots)
      for (const uint64_t l : locals) next.push_back(crt_pair(r, modulus, l % pk, pk));
    roots = std::move(next);
    modulus *= pk;
  }
  // Shift representatives 0 -> d (only the d == 1 case produces one).
  for (uint64_t& r : roots)
    if (r == 0) r = d;
  std::sort(roots.begin(), roots.end());
  return {d, std::move(roots)};
}

uint64_t count_q(uint64_t x, uint64_t d, const SpfSieve& sieve) {
  const UnitRoots ur = unit_roots_mod(d, sieve);
  uint64_t count = 0;
  for (const uint64_t r : ur.roots)
    if (r <= x) count += (x - r) / d + 1;
  return count;
}

int64_t q_approx_error(uint64_t x, uint64_t d, const SpfSieve& sieve) {
  const UnitRoots ur = unit_roots_mod(d, sieve);
  uint64_t q = 0;
  for (const uint64_t r : ur.roots)
    if (r <= x) q += (x - r) / d + 1;
  const __int128 err = static_cast<__int128>(d) * q -
                       static_cast<__int128>(ur.roots.size()) * x;
  assert(err >= INT64_MIN && err <= INT64_MAX);
  return static_cast<int64_t>(err);
}

uint64_t g_r_mod_prime_power(uint64_t r, uint64_t prime_power) {
  if (prime_power == 0) throw std::invalid_argument("g_r_mod_prime_power: zero modulus");
  const uint64_t m = prime_power;
  const uint64_t rr = r % m;
  const uint64_t target = static_cast<uint64_t>((static_cast<unsigned __int128>(rr) * rr) % m);
  uint64_t count = 0;
  for (uint64_t x = 1; x <= m; ++x) {
    const uint64_t sq = static_cast<uint64_t>((static_cast<unsigned __int128>(x) * x) % m);
    if (sq == target) ++count;
  }
  return count;
}

uint64_t g_r_bruteforce(uint64_t r, uint64_t d) {
  if (r == 0) throw std::invalid_argument("g_r_bruteforce: r must be positive");
  if (d == 0) throw std::invalid_argument("g_r_bruteforce: d must be positive");
  return g_r_mod_prime_power(r, d);  // same scan, any modulus
}

uint64_t g_r_crt(uint64_t r, uint64_t d, const SpfSieve& sieve) {
  if (r == 0) throw std::invalid_argument("g_r_crt: r must be positive");
  require_d(d, sieve);
  uint64_t product = 1;
  for (const auto& pp : sieve.factorize(d).factors())
    product *= g_r_mod_prime_power(r, pow_u64(pp.prime, pp.exponent));
  return product;
}

}  // namespace qul

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace qul {

struct PrimePower {
  uint64_t prime;
  uint32_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime-power decomposition of a 64-bit value, primes strictly increasing.
// value() == 1 exactly when the factor list is empty. Capacity is fixed:
// a uint64_t has at most 15 distinct prime factors, so no allocation is
// needed on the hot factorization paths.
class Factorization {
 public:
  static constexpr std::size_t kMaxFactors = 16;

  Factorization() = default;

  // Builds from an explicit (prime, exponent) list. Throws
  // std::invalid_argument unless primes are strictly increasing with
  // exponents >= 1. Primality of the entries is not checked here.
  static Factorization from_list(std::initializer_list<PrimePower> factors);

  uint64_t value() const { return value_; }
  std::span<const PrimePower> factors() const { return {entries_.data(), size_}; }
  bool empty() const { return size_ == 0; }

  // Appends a factor whose prime is strictly greater than the current
  // largest, multiplying value() by prime^exponent. Throws
  // std::overflow_error if the value would leave 64-bit range and
  // std::invalid_argument on an out-of-order prime or zero exponent.
  void append(uint64_t prime, uint32_t exponent);

  bool operator==(const Factorization& other) const;

 private:
  uint64_t value_ = 1;
  std::size_t size_ = 0;
  std::array<PrimePower, kMaxFactors> entries_{};
};

// Smallest-prime-factor table for 2..limit, 32-bit entries (4 bytes per
// entry keeps the default 1e7 table at ~40 MB). Immutable after
// construction and safe to share across threads.
class SpfSieve {
 public:
  // Hard cap on the table size; entries are 32-bit so limits up to 2^31
  // are representable. Memory is the practical bound well before that.
  static constexpr uint64_t kMaxLimit = uint64_t{1} << 31;

  // Throws std::invalid_argument unless 2 <= limit <= kMaxLimit.
  explicit SpfSieve(uint64_t limit);

  uint64_t limit() const { return limit_; }

  // Smallest prime factor of n, 2 <= n <= limit(). spf(p) == p iff p prime.
  uint32_t smallest_prime_factor(uint64_t n) const;

  bool is_prime(uint64_t n) const;

  // Prime-power decomposition of n, 1 <= n <= limit(), in O(log n).
  // Throws std::out_of_range if n == 0 or n > limit().
  Factorization factorize(uint64_t n) const;

  // Factorization of n^2 - 1 via the (n-1)(n+1) split, so the sieve only
  // has to cover n+1 instead of n^2. Requires n >= 2 and n+1 <= limit().
  // With limit() <= 2^31 the product (n-1)(n+1) always fits in 64 bits.
  Factorization factorize_n2_minus_1(uint64_t n) const;

 private:
  uint64_t limit_;
  std::vector<uint32_t> spf_;
};

// Number of divisors of f.value(): prod (exponent_i + 1).
uint64_t divisor_count(const Factorization& f);

// Number of distinct prime factors.
uint32_t omega(const Factorization& f);

// Factorization of f1.value() * f2.value(); exponents add per prime.
// Throws std::overflow_error if the product does not fit in 64 bits.
Factorization merge(const Factorization& f1, const Factorization& f2);

}  // namespace qul

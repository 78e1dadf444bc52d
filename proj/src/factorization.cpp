#include "qul/factorization.hpp"

#include <stdexcept>
#include <string>

namespace qul {

Factorization Factorization::from_list(std::initializer_list<PrimePower> factors) {
  Factorization f;
  for (const auto& pp : factors) f.append(pp.prime, pp.exponent);
  return f;
}

void Factorization::append(uint64_t prime, uint32_t exponent) {
  if (prime < 2 || exponent == 0)
    throw std::invalid_argument("Factorization::append: prime >= 2 and exponent >= 1 required");
  if (size_ > 0 && prime <= entries_[size_ - 1].prime)
    throw std::invalid_argument("Factorization::append: primes must be strictly increasing");
  if (size_ == kMaxFactors)
    throw std::overflow_error("Factorization::append: too many distinct primes");
  uint64_t v = value_;
  for (uint32_t i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(v, prime, &v))
      throw std::overflow_error("Factorization::append: value exceeds 64 bits");
  }
  entries_[size_++] = {prime, exponent};
  value_ = v;
}

bool Factorization::operator==(const Factorization& other) const {
  if (value_ != other.value_ || size_ != other.size_) return false;
  for (std::size_t i = 0; i < size_; ++i)
    if (!(entries_[i] == other.entries_[i])) return false;
  return true;
}

SpfSieve::SpfSieve(uint64_t limit) : limit_(limit) {
  if (limit < 2 || limit > kMaxLimit)
    throw std::invalid_argument("SpfSieve: limit must be in [2, 2^31], got " + std::to_string(limit));
  spf_.assign(limit + 1, 0);
  for (uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;  // composite, already marked
    spf_[i] = static_cast<uint32_t>(i);
    // Primes are visited in increasing order and only unset slots are
    // written, so each composite keeps its smallest prime factor.
    for (uint64_t j = i * i; j <= limit; j += i)
      if (spf_[j] == 0) spf_[j] = static_cast<uint32_t>(i);
  }
}

uint32_t SpfSieve::smallest_prime_factor(uint64_t n) const {
  if (n < 2 || n > limit_)
    throw std::out_of_range("SpfSieve::smallest_prime_factor: n outside [2, limit]");
  return spf_[n];
}

bool SpfSieve::is_prime(uint64_t n) const {
  return n >= 2 && smallest_prime_factor(n) == n;
}

Factorization SpfSieve::factorize(uint64_t n) const {
  if (n == 0 || n > limit_)
    throw std::out_of_range("SpfSieve::factorize: n outside [1, limit]");
  Factorization f;
  while (n > 1) {
    const uint32_t p = spf_[n];
    uint32_t e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    f.append(p, e);
  }
  return f;
}

Factorization SpfSieve::factorize_n2_minus_1(uint64_t n) const {
  if (n < 2) throw std::out_of_range("factorize_n2_minus_1: n must be >= 2");
  if (n + 1 > limit_)
    throw std::out_of_range("factorize_n2_minus_1: n + 1 exceeds sieve limit");
  return merge(factorize(n - 1), factorize(n + 1));
}

uint64_t divisor_count(const Factorization& f) {
  uint64_t count = 1;
  for (const auto& pp : f.factors()) count *= pp.exponent + 1;
  return count;
}

uint32_t omega(const Factorization& f) {
  return static_cast<uint32_t>(f.factors().size());
}

Factorization merge(const Factorization& f1, const Factorization& f2) {
  uint64_t product;
  if (__builtin_mul_overflow(f1.value(), f2.value(), &product))
    throw std::overflow_error("merge: product exceeds 64 bits");
  (void)product;
  Factorization out;
  auto a = f1.factors();
  auto b = f2.factors();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].prime < b[j].prime)) {
      out.append(a[i].prime, a[i].exponent);
      ++i;
    } else if (i == a.size() || b[j].prime < a[i].prime) {
      out.append(b[j].prime, b[j].exponent);
      ++j;
    } else {
      out.append(a[i].prime, a[i].exponent + b[j].exponent);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace qul

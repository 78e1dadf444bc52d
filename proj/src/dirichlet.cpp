#include "qul/dirichlet.hpp"

#include <cmath>
#include <stdexcept>

#include "qul/unit_roots.hpp"

namespace qul {

namespace {

struct CompensatedSum {
  long double sum = 0.0L;
  long double comp = 0.0L;

  void add(long double term) {
    const long double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term))
      comp += (sum - t) + term;
    else
      comp += (term - t) + sum;
    sum = t;
  }

  long double value() const { return sum + comp; }
};

void require_s(long double s) {
  if (!(s > 1.0L)) throw std::invalid_argument("series only converges for s > 1");
}

}  // namespace

long double zeta_real(long double s, uint32_t precision_terms) {
  require_s(s);
  const uint64_t m = precision_terms < 2 ? 2 : precision_terms;
  CompensatedSum base;
  for (uint64_t k = 1; k < m; ++k) base.add(std::pow(static_cast<long double>(k), -s));
  const long double mf = static_cast<long double>(m);
  long double tail = std::pow(mf, 1.0L - s) / (s - 1.0L);
  tail += std::pow(mf, -s) / 2.0L;
  tail += s / (12.0L * std::pow(mf, s + 1.0L));                              // B2 / 2!
  tail -= s * (s + 1.0L) * (s + 2.0L) / (720.0L * std::pow(mf, s + 3.0L));   // B4 / 4!
  return base.value() + tail;
}

long double euler_factor_2(long double s) {
  require_s(s);
  return 1.0L + std::pow(2.0L, -s) + 2.0L * std::pow(4.0L, -s) +
         4.0L / (std::pow(8.0L, s) - std::pow(4.0L, s));
}

long double f_closed(long double s) {
  require_s(s);
  const long double half_pow = std::pow(2.0L, -s);
  const long double two_adic_correction = (1.0L - half_pow) / (1.0L + half_pow);
  const long double z = zeta_real(s);
  return euler_factor_2(s) * two_adic_correction * z * z / zeta_real(2.0L * s);
}

long double f_truncated(long double s, uint64_t m, const SpfSieve& sieve) {
  require_s(s);
  if (m == 0) throw std::invalid_argument("f_truncated: m must be positive");
  if (m > sieve.limit()) throw std::out_of_range("f_truncated: m exceeds sieve limit");
  CompensatedSum acc;
  for (uint64_t n = 1; n <= m; ++n) {
    const long double coeff = static_cast<long double>(g_closed_form(n, sieve));
    acc.add(coeff * std::pow(static_cast<long double>(n), -s));
  }
  return acc.value();
}

long double euler_partial_product(long double s, uint64_t prime_bound,
                                  const SpfSieve& sieve) {
  require_s(s);
  if (prime_bound == 0) throw std::invalid_argument("euler_partial_product: bound must be positive");
  if (prime_bound > sieve.limit())
    throw std::out_of_range("euler_partial_product: bound exceeds sieve limit");
  long double product = euler_factor_2(s);
  for (uint64_t p = 3; p <= prime_bound; p += 2) {
    if (!sieve.is_prime(p)) continue;
    const long double x = std::pow(static_cast<long double>(p), -s);
    product *= (1.0L + x) / (1.0L - x);
  }
  return product;
}

std::vector<ResiduePoint> residue_constant(std::span<const long double> h_ladder) {
  std::vector<ResiduePoint> points;
  points.reserve(h_ladder.size());
  for (const long double h : h_ladder) {
    if (!(h > 0.0L)) throw std::invalid_argument("residue_constant: each h must be > 0");
    points.push_back({h, h * h * f_closed(1.0L + h)});
  }
  return points;
}

}  // namespace qul

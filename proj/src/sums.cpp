#include "qul/sums.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "qul/unit_roots.hpp"

namespace qul {

namespace {

// Neumaier-compensated accumulator; addition order is fixed by the callers.
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

uint64_t g_of(uint64_t d, const SpfSieve& sieve) { return g_closed_form(d, sieve); }

}  // namespace

uint64_t sum_s_direct(uint64_t n, const SpfSieve& sieve, unsigned threads) {
  if (n < 2) throw std::invalid_argument("sum_s_direct: n must be >= 2");
  if (n + 1 > sieve.limit()) throw std::out_of_range("sum_s_direct: n + 1 exceeds sieve limit");
  if (threads == 0) threads = 1;

  auto sum_range = [&sieve](uint64_t lo, uint64_t hi) {  // [lo, hi)
    uint64_t acc = 0;
    for (uint64_t k = lo; k < hi; ++k) acc += divisor_count(sieve.factorize_n2_minus_1(k));
    return acc;
  };

  const uint64_t first = 2, last = n + 1;
  const uint64_t count = last - first;
  if (threads == 1 || count < 2 * threads) return sum_range(first, last);

  std::vector<uint64_t> partial(threads, 0);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  const uint64_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const uint64_t lo = first + t * chunk;
    const uint64_t hi = std::min(last, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([&, lo, hi, t] { partial[t] = sum_range(lo, hi); });
  }
  for (auto& w : workers) w.join();
  uint64_t total = 0;
  for (uint64_t p : partial) total += p;
  return total;
}

uint64_t sum_s_congruence(uint64_t n, const SpfSieve& sieve) {
  if (n < 2) throw std::invalid_argument("sum_s_congruence: n must be >= 2");
  if (n > sieve.limit()) throw std::out_of_range("sum_s_congruence: n exceeds sieve limit");
  uint64_t acc = 0;
  for (uint64_t d = 1; d < n; ++d) {
    const UnitRoots ur = unit_roots_mod(d, sieve);
    uint64_t q = 0;  // Q(n, d)
    for (const uint64_t r : ur.roots)
      if (r <= n) q += (n - r) / d + 1;
    acc += q - ur.roots.size();  // Q(d, d) == g(d)
  }
  return 2 * acc;
}

uint64_t sum_s_oracle(uint64_t n) {
  if (n < 2) throw std::invalid_argument("sum_s_oracle: n must be >= 2");
  uint64_t total = 0;
  for (uint64_t k = 2; k <= n; ++k) {
    const uint64_t m = k * k - 1;
    uint64_t dc = 0;
    for (uint64_t d = 1; d * d <= m; ++d)
      if (m % d == 0) dc += (d * d == m) ? 1 : 2;
    total += dc;
  }
  return total;
}

uint64_t sum_g(uint64_t n, const SpfSieve& sieve) {
  if (n == 0) throw std::invalid_argument("sum_g: n must be positive");
  if (n > sieve.limit()) throw std::out_of_range("sum_g: n exceeds sieve limit");
  uint64_t total = 0;
  for (uint64_t d = 1; d < n; ++d) total += g_of(d, sieve);
  return total;
}

long double sum_h(uint64_t n, const SpfSieve& sieve) {
  if (n == 0) throw std::invalid_argument("sum_h: n must be positive");
  if (n > sieve.limit()) throw std::out_of_range("sum_h: n exceeds sieve limit");
  CompensatedSum acc;
  for (uint64_t d = 1; d < n; ++d)
    acc.add(static_cast<long double>(g_of(d, sieve)) / static_cast<long double>(d));
  return acc.value();
}

bool growth_bound_check(uint64_t n, const SpfSieve& sieve) {
  if (n == 0) throw std::invalid_argument("growth_bound_check: n must be positive");
  if (n > sieve.limit()) throw std::out_of_range("growth_bound_check: n exceeds sieve limit");
  uint64_t sum_g_val = 0, sum_two_omega = 0;
  for (uint64_t d = 1; d < n; ++d) {
    const auto [a, q] = split_two_adic(d);
    const uint32_t wq = (q == 1) ? 0 : omega(sieve.factorize(q));
    const uint32_t s = (a <= 1) ? 0 : (a == 2 ? 1 : 2);
    sum_g_val += uint64_t{1} << (wq + s);
    sum_two_omega += uint64_t{1} << (wq + (a > 0 ? 1 : 0));
  }
  return sum_g_val <= sum_two_omega;
}

std::vector<ConvergenceRow> convergence_table(std::span<const uint64_t> ns,
                                              const SpfSieve& sieve, unsigned threads) {
  std::vector<ConvergenceRow> rows;
  rows.reserve(ns.size());
  for (const uint64_t n : ns) {
    if (n < 2) throw std::invalid_argument("convergence_table: each N must be >= 2");
    ConvergenceRow row;
    row.n = n;
    row.s = sum_s_direct(n, sieve, threads);
    row.g = sum_g(n, sieve);
    row.h = sum_h(n, sieve);
    const long double ln = std::log(static_cast<long double>(n));
    row.ratio_s = static_cast<long double>(row.s) / (static_cast<long double>(n) * ln * ln);
    row.ratio_g = static_cast<long double>(row.g) / (static_cast<long double>(n) * ln);
    row.ratio_h = row.h / (ln * ln);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qul

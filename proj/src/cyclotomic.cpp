#include "cyclocoef/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cyclocoef/detail/checked_int.hpp"

namespace cyclocoef {

namespace {

// mu(m / d) for a divisor d of m, from the factorization of m.
int mobius_of_quotient(const Factorization& m, std::uint64_t d) {
  int sign = 1;
  for (const auto& [p, e] : m.factors()) {
    unsigned in_d = 0;
    while (d % p == 0) {
      d /= p;
      ++in_d;
    }
    const unsigned left = e - in_d;
    if (left >= 2) return 0;
    if (left == 1) sign = -sign;
  }
  return sign;
}

}  // namespace

CyclotomicTruncated cyclotomic_truncated(const Factorization& m, unsigned order) {
  TruncatedSeries acc = TruncatedSeries::one(order);
  const std::uint64_t n = m.value();
  for (std::uint64_t d = 1; d <= order && d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius_of_quotient(m, d);
    if (mu != 0) acc = acc * binomial_power(d, mu, order);
  }
  return {n, std::move(acc)};
}

CyclotomicTruncated cyclotomic_truncated(std::uint64_t m, unsigned order) {
  return cyclotomic_truncated(factorize(m), order);
}

std::vector<std::int64_t> cyclotomic_full(std::uint64_t m) {
  return *CyclotomicCache::global().get(m);
}

CyclotomicCache& CyclotomicCache::global() {
  static CyclotomicCache cache;
  return cache;
}

std::size_t CyclotomicCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::shared_ptr<const CyclotomicCache::Poly> CyclotomicCache::get(std::uint64_t m) {
  if (m == 0 || m > kMaxFullCyclotomic)
    throw std::invalid_argument("cyclotomic_full: m must lie in [1, " +
                                std::to_string(kMaxFullCyclotomic) + "], got " +
                                std::to_string(m));
  {
    std::lock_guard lock(mutex_);
    if (auto it = entries_.find(m); it != entries_.end()) return it->second;
  }
  // Computed outside the lock; a concurrent duplicate computes the same value.
  auto poly = std::make_shared<const Poly>(compute(m));
  std::lock_guard lock(mutex_);
  if (auto it = entries_.find(m); it != entries_.end()) return it->second;
  if (entries_.size() < capacity_) entries_.emplace(m, poly);
  return poly;
}

CyclotomicCache::Poly CyclotomicCache::compute(std::uint64_t m) {
  Poly q(m + 1, 0);
  q[0] = -1;
  q[m] = 1;
  auto divs = divisors(factorize(m));
  divs.pop_back();  // m itself
  // Largest divisors first: the dividend shrinks fastest.
  std::reverse(divs.begin(), divs.end());
  for (const std::uint64_t d : divs) {
    const auto phi_d = get(d);
    const std::size_t dd = phi_d->size() - 1;
    const std::size_t dq = q.size() - 1;
    Poly quotient(dq - dd + 1, 0);
    for (std::size_t i = dq + 1; i-- > dd;) {
      const std::int64_t lead = q[i];  // Phi_d is monic
      quotient[i - dd] = lead;
      if (lead == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) {
        if (!detail::mul_add(q[i - dd + j], -lead, (*phi_d)[j]))
          throw std::overflow_error("cyclotomic_full: coefficient overflow at m = " +
                                    std::to_string(m));
      }
    }
    for (std::size_t i = 0; i < dd; ++i)
      if (q[i] != 0)
        throw std::logic_error("cyclotomic_full: nonzero remainder dividing by Phi_" +
                               std::to_string(d));
    q = std::move(quotient);
  }
  return q;
}

std::vector<Integer> poly_multiply(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Integer> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

}  // namespace cyclocoef

#include "cyclocoef/arith.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cyclocoef/errors.hpp"

namespace cyclocoef {

Factorization::Factorization(std::uint64_t n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {
  if (n_ == 0) throw std::invalid_argument("factorization of zero");
  std::uint64_t product = 1;
  std::uint64_t previous = 1;
  for (const auto& [p, e] : factors_) {
    if (p <= previous || e == 0)
      throw std::invalid_argument("factors must have increasing primes and positive exponents");
    previous = p;
    for (unsigned i = 0; i < e; ++i) {
      if (__builtin_mul_overflow(product, p, &product))
        throw std::invalid_argument("factor product overflows");
    }
  }
  if (product != n_) throw std::invalid_argument("factor product does not equal n");
}

std::uint64_t Factorization::tau() const noexcept {
  std::uint64_t t = 1;
  for (const auto& f : factors_) t *= f.exponent + 1;
  return t;
}

bool Factorization::squarefree() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const PrimePower& f) { return f.exponent == 1; });
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  const std::uint64_t original = n;
  std::vector<PrimePower> factors;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) factors.push_back({p, e});
  };
  strip(2);
  strip(3);
  // 6k +- 1 wheel
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) factors.push_back({n, 1});
  return Factorization(original, std::move(factors));
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  out.reserve(f.tau());
  for (const auto& [p, e] : f.factors()) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(const Factorization& f) noexcept {
  if (!f.squarefree()) return 0;
  return f.nu() % 2 == 0 ? 1 : -1;
}

int mobius(std::uint64_t n) { return mobius(factorize(n)); }

int delta(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("delta: n must be positive");
  return n == 1 ? -1 : 1;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  if (limit > kMaxSieveLimit)
    throw CapExceeded("sieve memory", "prime sieve limit " + std::to_string(limit) +
                                          " exceeds " + std::to_string(kMaxSieveLimit));
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  return primes;
}

NuSieve::NuSieve(std::uint64_t limit) : values_(limit + 1, 0) {
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (values_[p] != 0) continue;  // composite: already hit by a smaller prime
    for (std::uint64_t q = p; q <= limit; q += p) ++values_[q];
  }
}

NuSieve sieve_nu(std::uint64_t limit) {
  if (limit == 0) throw std::invalid_argument("sieve_nu: limit must be positive");
  if (limit > kMaxSieveLimit)
    throw CapExceeded("sieve memory", "nu sieve limit " + std::to_string(limit) + " exceeds " +
                                          std::to_string(kMaxSieveLimit));
  return NuSieve(limit);
}

SmallestFactorSieve::SmallestFactorSieve(std::uint64_t limit) {
  if (limit == 0) throw std::invalid_argument("smallest factor sieve: limit must be positive");
  if (limit > kMaxSieveLimit)
    throw CapExceeded("sieve memory", "factor sieve limit " + std::to_string(limit) +
                                          " exceeds " + std::to_string(kMaxSieveLimit));
  spf_.assign(limit + 1, 0);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (spf_[p] != 0) continue;
    for (std::uint64_t q = p; q <= limit; q += p)
      if (spf_[q] == 0) spf_[q] = static_cast<std::uint32_t>(p);
  }
}

Factorization SmallestFactorSieve::factorize(std::uint64_t n) const {
  if (n == 0 || n > limit()) throw std::out_of_range("smallest factor sieve: n out of range");
  const std::uint64_t original = n;
  std::vector<PrimePower> factors;
  while (n > 1) {
    const std::uint64_t p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.push_back({p, e});
  }
  return Factorization(original, std::move(factors));
}

}  // namespace cyclocoef

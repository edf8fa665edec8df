#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cyclocoef {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a positive integer. Primes are strictly
/// increasing, every exponent is at least one, and the list is empty
/// exactly when n = 1.
class Factorization {
 public:
  Factorization() = default;

  /// Validates the invariants; throws std::invalid_argument otherwise.
  /// Primality of the listed primes is the caller's responsibility.
  Factorization(std::uint64_t n, std::vector<PrimePower> factors);

  std::uint64_t value() const noexcept { return n_; }
  std::span<const PrimePower> factors() const noexcept { return factors_; }

  /// Number of distinct prime factors.
  unsigned nu() const noexcept { return static_cast<unsigned>(factors_.size()); }
  /// Number of divisors.
  std::uint64_t tau() const noexcept;
  bool squarefree() const noexcept;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::uint64_t n_ = 1;
  std::vector<PrimePower> factors_;
};

/// Trial division up to sqrt(n). Intended for n up to about 10^12;
/// larger inputs are correct but slow. Throws std::invalid_argument for n = 0.
Factorization factorize(std::uint64_t n);

/// All divisors in strictly increasing order.
std::vector<std::uint64_t> divisors(const Factorization& f);

int mobius(const Factorization& f) noexcept;
int mobius(std::uint64_t n);

/// Sign normalizer: -1 for n = 1, +1 otherwise, so that delta(n) * Phi_n
/// has constant term +1. Throws std::invalid_argument for n = 0.
int delta(std::uint64_t n);

/// Primes p <= limit, by the sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Largest sieve accepted by sieve_nu and SmallestFactorSieve. sieve_nu
/// stores one byte per entry, so this is about 2 GB of memory.
inline constexpr std::uint64_t kMaxSieveLimit = 2'000'000'000ULL;

/// nu(n) for every 1 <= n <= limit, one byte per entry
/// (nu(n) <= 9 for n <= 10^9, and <= 15 for any 64-bit n).
class NuSieve {
 public:
  explicit NuSieve(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return values_.size() - 1; }
  unsigned operator[](std::uint64_t n) const noexcept { return values_[n]; }
  /// Entry 0 is unused and holds zero.
  std::span<const std::uint8_t> values() const noexcept { return values_; }

 private:
  std::vector<std::uint8_t> values_;
};

/// Throws std::invalid_argument for limit = 0 and CapExceeded above
/// kMaxSieveLimit.
NuSieve sieve_nu(std::uint64_t limit);

/// Smallest-prime-factor table for factoring every n in a range quickly.
class SmallestFactorSieve {
 public:
  explicit SmallestFactorSieve(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return spf_.size() - 1; }
  /// Requires 1 <= n <= limit().
  Factorization factorize(std::uint64_t n) const;

 private:
  std::vector<std::uint32_t> spf_;
};

}  // namespace cyclocoef

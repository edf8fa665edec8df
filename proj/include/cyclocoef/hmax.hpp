#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cyclocoef/arith.hpp"
#include "cyclocoef/series.hpp"

namespace cyclocoef {

/// Net exponents (k(1), ..., k(order)) in the representation of a divisor
/// of x^n - 1 as prod_{d <= order} (1 - x^d)^{k(d)} mod x^{order+1}.
/// k[d - 1] holds k(d).
struct ExponentVector {
  unsigned order = 0;
  std::vector<int> k;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
};

enum class Method { bruteforce, exponent_dp };

std::string_view to_string(Method m) noexcept;

/// H(r, n) with a divisor subset S of n such that prod_{m in S} delta(m) Phi_m
/// has |coefficient of x^r| equal to value. The witness is ascending.
struct HResult {
  unsigned r = 0;
  std::uint64_t n = 0;
  Integer value;
  std::vector<std::uint64_t> witness;
  Method method = Method::bruteforce;
};

struct BruteforceOptions {
  /// Refuse n with more divisors than this (2^max_tau subsets). At most 62.
  unsigned max_tau = 20;
};

struct FastOptions {
  /// Refuse when any layer of the reachable set would exceed this many vectors.
  std::size_t max_vectors = 10'000'000;
};

/// Product of delta(m) Phi_m mod x^{order+1} over m in subset. Throws
/// std::invalid_argument if some m does not divide n.
TruncatedSeries divisor_subset_poly(const Factorization& n, std::span<const std::uint64_t> subset,
                                    unsigned order);
TruncatedSeries divisor_subset_poly(std::uint64_t n, std::span<const std::uint64_t> subset,
                                    unsigned order);

/// Exhaustive search over all 2^tau(n) divisor subsets. Among subsets
/// attaining the maximum the witness is the lexicographically smallest
/// ascending divisor list. Throws CapExceeded("tau(n)") above max_tau.
HResult h_bruteforce(unsigned r, const Factorization& n, const BruteforceOptions& opts = {});
HResult h_bruteforce(unsigned r, std::uint64_t n, const BruteforceOptions& opts = {});

/// Every exponent vector reachable from a subset of the divisors of n,
/// sorted lexicographically. Throws CapExceeded("reachable vectors").
std::vector<ExponentVector> reachable_vectors(const Factorization& n, unsigned order,
                                              const FastOptions& opts = {});
std::vector<ExponentVector> reachable_vectors(std::uint64_t n, unsigned order,
                                              const FastOptions& opts = {});

/// Maximizes over the reachable exponent vectors instead of the subsets.
/// The witness is recovered by walking the DP parent links back.
HResult h_fast(unsigned r, const Factorization& n, const FastOptions& opts = {});
HResult h_fast(unsigned r, std::uint64_t n, const FastOptions& opts = {});

/// Coefficient of x^r in prod_{d <= r} (1 - x^d)^{k(d)}. Requires k.size() == r.
Integer exponent_vector_coefficient(std::span<const int> k, unsigned r);

/// The divisor built from all m | n with mu(m) = -1, and the signed
/// coefficient of x^r in its product. Its absolute value bounds H(r, n)
/// from below.
struct MobiusWitness {
  std::vector<std::uint64_t> subset;
  Integer coefficient;
};

/// Throws std::invalid_argument for n = 1.
MobiusWitness mobius_witness(unsigned r, std::uint64_t n);

/// Coefficient of x^r in prod_{d <= r} (1 - x^d)^{-2^{nu(n)-1}}, an upper
/// bound for H(r, n). Throws std::invalid_argument for n = 1.
Integer coefficient_upper_bound(unsigned r, std::uint64_t n);

/// |coefficient of x^r| of the witness product; equals value for a valid result.
Integer witness_coefficient(const HResult& result);

}  // namespace cyclocoef

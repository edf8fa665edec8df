#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "cyclocoef/arith.hpp"
#include "cyclocoef/series.hpp"

namespace cyclocoef {

/// delta(m) * Phi_m(x) mod x^{order+1}. The constant term is always +1.
struct CyclotomicTruncated {
  std::uint64_t m;
  TruncatedSeries series;
};

/// Product of (1 - x^d)^{mu(m/d)} over divisors d <= order of m. Divisors
/// above the order contribute 1 and are never visited, so m may be huge.
CyclotomicTruncated cyclotomic_truncated(const Factorization& m, unsigned order);
CyclotomicTruncated cyclotomic_truncated(std::uint64_t m, unsigned order);

/// Largest index accepted by cyclotomic_full.
inline constexpr std::uint64_t kMaxFullCyclotomic = 100'000;

/// Coefficients of Phi_m (ascending powers, degree phi(m)), obtained by
/// exact long division of x^m - 1 by Phi_d for every proper divisor d.
/// Shares the process-wide cache below. Throws std::invalid_argument for
/// m = 0 or m > kMaxFullCyclotomic, and std::overflow_error if an
/// intermediate coefficient leaves the 64-bit range.
std::vector<std::int64_t> cyclotomic_full(std::uint64_t m);

/// Memoizing evaluator for cyclotomic_full. Lookups and inserts are
/// mutex-guarded; once `capacity` entries are held, new results are
/// computed but not stored.
class CyclotomicCache {
 public:
  using Poly = std::vector<std::int64_t>;

  explicit CyclotomicCache(std::size_t capacity = 4096) : capacity_(capacity) {}

  std::shared_ptr<const Poly> get(std::uint64_t m);
  std::size_t size() const;
  std::size_t capacity() const noexcept { return capacity_; }

  static CyclotomicCache& global();

 private:
  Poly compute(std::uint64_t m);

  std::size_t capacity_;
  mutable std::mutex mutex_;
  std::unordered_map<std::uint64_t, std::shared_ptr<const Poly>> entries_;
};

/// Exact product of integer polynomials (ascending coefficients).
std::vector<Integer> poly_multiply(const std::vector<Integer>& a, const std::vector<Integer>& b);

}  // namespace cyclocoef

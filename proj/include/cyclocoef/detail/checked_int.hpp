#pragma once

// Machine-width fast paths for truncated series arithmetic. Every kernel
// reports overflow instead of wrapping, so callers can redo the work with
// exact integers and get bit-identical results.

#include <cstdint>
#include <span>

#include "cyclocoef/series.hpp"

namespace cyclocoef::detail {

inline bool mul_add(std::int64_t& acc, std::int64_t a, std::int64_t b) noexcept {
  std::int64_t p;
  return !__builtin_mul_overflow(a, b, &p) && !__builtin_add_overflow(acc, p, &acc);
}

inline bool mul_add(Integer& acc, const Integer& a, const Integer& b) {
  acc += a * b;
  return true;
}

/// out = a * b mod x^{n}, n = out.size(). out must not alias a or b.
template <class Int>
bool mul_trunc(std::span<const Int> a, std::span<const Int> b, std::span<Int> out) {
  const std::size_t n = out.size();
  for (std::size_t k = 0; k < n; ++k) {
    Int acc = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      if (a[i] == 0) continue;
      if (!mul_add(acc, a[i], b[k - i])) return false;
    }
    out[k] = acc;
  }
  return true;
}

/// Coefficient of x^k in a * b.
template <class Int>
bool product_coefficient(std::span<const Int> a, std::span<const Int> b, std::size_t k, Int& out) {
  Int acc = 0;
  for (std::size_t i = 0; i <= k; ++i) {
    if (a[i] == 0) continue;
    if (!mul_add(acc, a[i], b[k - i])) return false;
  }
  out = acc;
  return true;
}

inline bool fits_int64(const Integer& v) noexcept { return v.fits_slong_p(); }

}  // namespace cyclocoef::detail

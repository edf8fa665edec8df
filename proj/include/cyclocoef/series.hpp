#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cyclocoef {

using Integer = mpz_class;

/// A power series with exact integer coefficients c_0..c_order, i.e. an
/// element of Z[[x]] / (x^{order+1}). Immutable once constructed.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(unsigned order);
  /// Throws std::invalid_argument unless coeffs.size() == order + 1.
  TruncatedSeries(unsigned order, std::vector<Integer> coeffs);

  static TruncatedSeries one(unsigned order);

  unsigned order() const noexcept { return order_; }
  const Integer& operator[](std::size_t i) const { return coeffs_.at(i); }
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  TruncatedSeries operator-() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  unsigned order_;
  std::vector<Integer> coeffs_;
};

TruncatedSeries ts_one(unsigned order);

/// Truncated Cauchy product. Throws std::invalid_argument on mismatched orders.
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
inline TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

/// (1 - x^d)^e mod x^{order+1}. Negative exponents use the formal inverse
/// sum_j C(k+j-1, j) x^{dj} for e = -k. Requires d >= 1.
TruncatedSeries binomial_power(std::uint64_t d, std::int64_t e, unsigned order);

/// True iff |f_i| <= g_i for every i. Throws std::invalid_argument on
/// mismatched orders.
bool dominated_by(const TruncatedSeries& f, const TruncatedSeries& g);

/// Generalized binomial coefficient C(k, c) for any integer k and c >= 0.
Integer generalized_binomial(const Integer& k, unsigned c);

std::string to_string(const TruncatedSeries& s);

}  // namespace cyclocoef

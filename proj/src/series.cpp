#include "cyclocoef/series.hpp"

#include <stdexcept>

namespace cyclocoef {

TruncatedSeries::TruncatedSeries(unsigned order) : order_(order), coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<Integer> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(order) + 1)
    throw std::invalid_argument("truncated series: expected " + std::to_string(order + 1) +
                                " coefficients, got " + std::to_string(coeffs_.size()));
}

TruncatedSeries TruncatedSeries::one(unsigned order) {
  std::vector<Integer> c(order + 1);
  c[0] = 1;
  return TruncatedSeries(order, std::move(c));
}

TruncatedSeries ts_one(unsigned order) { return TruncatedSeries::one(order); }

TruncatedSeries TruncatedSeries::operator-() const {
  std::vector<Integer> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
  return TruncatedSeries(order_, std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("series product: orders " + std::to_string(a.order()) + " and " +
                                std::to_string(b.order()) + " differ");
  const unsigned r = a.order();
  std::vector<Integer> c(r + 1);
  for (unsigned i = 0; i <= r; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; i + j <= r; ++j) c[i + j] += a[i] * b[j];
  }
  return TruncatedSeries(r, std::move(c));
}

Integer generalized_binomial(const Integer& k, unsigned c) {
  Integer num = 1;
  Integer den = 1;
  for (unsigned i = 0; i < c; ++i) {
    num *= k - i;
    den *= i + 1;
  }
  return num / den;
}

TruncatedSeries binomial_power(std::uint64_t d, std::int64_t e, unsigned order) {
  if (d == 0) throw std::invalid_argument("binomial_power: d must be positive");
  std::vector<Integer> c(order + 1);
  c[0] = 1;
  // coefficient of x^{dj} is (-1)^j C(e, j); the running ratio avoids factorials
  Integer term = 1;
  for (std::uint64_t j = 1; j <= order / d; ++j) {
    term *= Integer(static_cast<long>(e)) - static_cast<unsigned long>(j - 1);
    term = -term;
    term /= static_cast<unsigned long>(j);  // exact
    c[d * j] = term;
  }
  return TruncatedSeries(order, std::move(c));
}

bool dominated_by(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.order() != g.order())
    throw std::invalid_argument("dominated_by: orders " + std::to_string(f.order()) + " and " +
                                std::to_string(g.order()) + " differ");
  for (unsigned i = 0; i <= f.order(); ++i)
    if (abs(f[i]) > g[i]) return false;
  return true;
}

std::string to_string(const TruncatedSeries& s) {
  std::string out = "[";
  for (unsigned i = 0; i <= s.order(); ++i) {
    if (i) out += ',';
    out += s[i].get_str();
  }
  return out + "]";
}

}  // namespace cyclocoef

#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cyclocoef/hmax.hpp"
#include "cyclocoef/series.hpp"

namespace cyclocoef {

/// 50 significant decimal digits.
using Real = boost::multiprecision::cpp_bin_float_50;

enum class ConstantKind { g_at_1, c_of_r };

/// An Euler product truncated at prime_limit. tail_bound bounds
/// |log(true value / value)|; see docs/math_notes.md.
struct EulerProductEstimate {
  unsigned r = 0;
  std::uint64_t prime_limit = 0;
  Real value;
  Real tail_bound;
  ConstantKind kind = ConstantKind::g_at_1;
};

/// Largest r accepted by the constant and partial-sum routines.
inline constexpr unsigned kMaxAsymptoticR = 16;

/// log((1 + a/p)(1 - 1/p)^a) with a = 2^r - 1.
Real log_euler_factor(unsigned r, std::uint64_t p);

/// a(a+1)/p^2, the envelope of |log_euler_factor(r, p)|.
Real log_factor_envelope(unsigned r, std::uint64_t p);

/// g(1) = prod_{p <= prime_limit} (1 + a/p)(1 - 1/p)^a, a = 2^r - 1,
/// accumulated in log space. Throws std::invalid_argument unless
/// prime_limit > 2a.
EulerProductEstimate euler_product(unsigned r, std::uint64_t prime_limit);

/// g(1) / ((2^r - 1)! 2^r r!), with the tail bound of euler_product.
EulerProductEstimate asymptotic_constant(unsigned r, std::uint64_t prime_limit);

/// (2^r - 1)! 2^r r!
Real constant_denominator(unsigned r);

/// Exact sum_{n <= x} 2^{r nu(n)}.
Integer two_pow_nu_sum(unsigned r, std::uint64_t x, unsigned jobs = 1);

/// Exact sum_{n <= x} H(r, n) by the exponent-vector method. A cap error
/// is rethrown with the offending n in its message.
Integer h_sum(unsigned r, std::uint64_t x, unsigned jobs = 1, const FastOptions& opts = {});

enum class SummandKind { h, two_pow_r_nu };

std::string_view to_string(SummandKind k) noexcept;

struct ReportRow {
  std::uint64_t x = 0;
  Integer sum;
  Real leading;
  Real ratio;
};

/// Rows (x, sum, leading, ratio) with leading = c(r) x (ln x)^{2^r-1} for
/// h and g(1) x (ln x)^{2^r-1} / (2^r-1)! for two_pow_r_nu.
struct PartialSumReport {
  unsigned r = 0;
  SummandKind kind = SummandKind::two_pow_r_nu;
  std::uint64_t prime_limit = 0;
  Real constant;  // the factor multiplying x (ln x)^{2^r-1}
  std::vector<ReportRow> rows;
};

struct ReportOptions {
  std::uint64_t prime_limit = 1'000'000;
  unsigned jobs = 1;
  FastOptions fast;
};

/// Checkpoints must be strictly increasing and at least 2.
PartialSumReport partial_sum_report(SummandKind kind, unsigned r,
                                    std::span<const std::uint64_t> checkpoints,
                                    const ReportOptions& opts = {});

struct ConvergenceReport {
  PartialSumReport two_pow_r_nu;
  PartialSumReport h;
};

ConvergenceReport convergence_report(unsigned r, std::span<const std::uint64_t> checkpoints,
                                     const ReportOptions& opts = {});

/// Locale-independent rendering with `digits` significant digits.
std::string format_real(const Real& v, int digits = 10);

}  // namespace cyclocoef

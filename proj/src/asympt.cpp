#include "cyclocoef/asympt.hpp"

#include <array>
#include <locale>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cyclocoef/arith.hpp"
#include "cyclocoef/detail/parallel.hpp"
#include "cyclocoef/errors.hpp"

namespace cyclocoef {

namespace {

constexpr std::uint64_t kChunk = 1 << 15;

void require_r(unsigned r) {
  if (r == 0 || r > kMaxAsymptoticR)
    throw std::invalid_argument("r must lie in [1, " + std::to_string(kMaxAsymptoticR) +
                                "], got " + std::to_string(r));
}

std::uint64_t excess(unsigned r) { return (std::uint64_t{1} << r) - 1; }

void require_checkpoints(std::span<const std::uint64_t> checkpoints) {
  std::uint64_t previous = 1;
  for (const std::uint64_t x : checkpoints) {
    if (x <= previous)
      throw std::invalid_argument("checkpoints must be strictly increasing and at least 2");
    previous = x;
  }
}

using Histogram = std::array<std::uint64_t, 16>;

// Cumulative counts of n <= x by nu(n), one histogram per checkpoint.
std::vector<Histogram> nu_histograms(std::span<const std::uint64_t> checkpoints, unsigned jobs) {
  std::vector<Histogram> out;
  if (checkpoints.empty()) return out;
  const NuSieve sieve = sieve_nu(checkpoints.back());
  Histogram running{};
  std::uint64_t from = 1;
  for (const std::uint64_t x : checkpoints) {
    const auto parts = detail::map_chunks<Histogram>(from, x, kChunk, jobs,
                                                     [&](std::uint64_t lo, std::uint64_t hi) {
                                                       Histogram h{};
                                                       for (std::uint64_t n = lo; n <= hi; ++n)
                                                         ++h[sieve[n]];
                                                       return h;
                                                     });
    for (const auto& h : parts)
      for (std::size_t v = 0; v < h.size(); ++v) running[v] += h[v];
    out.push_back(running);
    from = x + 1;
  }
  return out;
}

Integer weighted_sum(const Histogram& h, unsigned r) {
  Integer total = 0;
  for (std::size_t v = 0; v < h.size(); ++v) {
    if (h[v] == 0) continue;
    Integer term = static_cast<unsigned long>(h[v]);
    total += term << static_cast<mp_bitcnt_t>(r * v);
  }
  return total;
}

// Cumulative sums of H(r, n) up to each checkpoint.
std::vector<Integer> h_sums(unsigned r, std::span<const std::uint64_t> checkpoints, unsigned jobs,
                            const FastOptions& opts) {
  std::vector<Integer> out;
  if (checkpoints.empty()) return out;
  const SmallestFactorSieve sieve(checkpoints.back());
  Integer running = 0;
  std::uint64_t from = 1;
  for (const std::uint64_t x : checkpoints) {
    const auto parts = detail::map_chunks<Integer>(
        from, x, kChunk, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
          Integer s = 0;
          for (std::uint64_t n = lo; n <= hi; ++n) {
            try {
              s += h_fast(r, sieve.factorize(n), opts).value;
            } catch (const CapExceeded& e) {
              throw CapExceeded(e.quantity(), std::string(e.what()) + " at n = " +
                                                  std::to_string(n));
            }
          }
          return s;
        });
    for (const auto& s : parts) running += s;
    out.push_back(running);
    from = x + 1;
  }
  return out;
}

Real to_real(const Integer& v) { return Real(v.get_str()); }

Real leading_term(const Real& constant, unsigned r, std::uint64_t x) {
  const Real lx = log(Real(x));
  return constant * Real(x) * pow(lx, static_cast<long>(excess(r)));
}

}  // namespace

Real log_euler_factor(unsigned r, std::uint64_t p) {
  const Real a = static_cast<double>(excess(r));
  const Real inv = Real(1) / Real(p);
  return boost::multiprecision::log1p(a * inv) + a * boost::multiprecision::log1p(-inv);
}

Real log_factor_envelope(unsigned r, std::uint64_t p) {
  const Real a = static_cast<double>(excess(r));
  const Real pp = Real(p);
  return a * (a + 1) / (pp * pp);
}

EulerProductEstimate euler_product(unsigned r, std::uint64_t prime_limit) {
  require_r(r);
  const std::uint64_t a = excess(r);
  if (prime_limit <= 2 * a)
    throw std::invalid_argument("prime limit " + std::to_string(prime_limit) +
                                " must exceed 2(2^r - 1) = " + std::to_string(2 * a));
  Real log_sum = 0;
  for (const std::uint64_t p : primes_up_to(prime_limit)) {
    const Real term = log_euler_factor(r, p);
    if (term >= 0 || (p > 2 * a && -term > log_factor_envelope(r, p)))
      throw std::logic_error("Euler factor at p = " + std::to_string(p) +
                             " violates its envelope");
    log_sum += term;
  }
  // sum_{p > P} a(a+1)/p^2 < a(a+1) sum_{n > P} 1/n^2 < a(a+1)/P
  const Real ad = static_cast<double>(a);
  Real tail = ad * (ad + 1) / Real(prime_limit);
  return {r, prime_limit, exp(log_sum), tail, ConstantKind::g_at_1};
}

Real constant_denominator(unsigned r) {
  require_r(r);
  Real d = 1;
  for (std::uint64_t i = 2; i <= excess(r); ++i) d *= static_cast<double>(i);
  for (unsigned i = 2; i <= r; ++i) d *= static_cast<double>(i);
  return d * Real(std::uint64_t{1} << r);
}

EulerProductEstimate asymptotic_constant(unsigned r, std::uint64_t prime_limit) {
  auto g = euler_product(r, prime_limit);
  g.value /= constant_denominator(r);
  g.kind = ConstantKind::c_of_r;
  return g;
}

Integer two_pow_nu_sum(unsigned r, std::uint64_t x, unsigned jobs) {
  require_r(r);
  if (x == 0) throw std::invalid_argument("x must be positive");
  const std::array<std::uint64_t, 1> single{x};
  return weighted_sum(nu_histograms(single, jobs).front(), r);
}

Integer h_sum(unsigned r, std::uint64_t x, unsigned jobs, const FastOptions& opts) {
  if (r == 0) throw std::invalid_argument("r must be positive");
  if (x == 0) throw std::invalid_argument("x must be positive");
  const std::array<std::uint64_t, 1> single{x};
  return h_sums(r, single, jobs, opts).front();
}

std::string_view to_string(SummandKind k) noexcept {
  return k == SummandKind::h ? "h" : "nu";
}

PartialSumReport partial_sum_report(SummandKind kind, unsigned r,
                                    std::span<const std::uint64_t> checkpoints,
                                    const ReportOptions& opts) {
  require_r(r);
  require_checkpoints(checkpoints);
  PartialSumReport report;
  report.r = r;
  report.kind = kind;
  report.prime_limit = opts.prime_limit;
  if (kind == SummandKind::h) {
    report.constant = asymptotic_constant(r, opts.prime_limit).value;
  } else {
    Real factorial = 1;
    for (std::uint64_t i = 2; i <= excess(r); ++i) factorial *= static_cast<double>(i);
    report.constant = euler_product(r, opts.prime_limit).value / factorial;
  }
  std::vector<Integer> sums;
  if (kind == SummandKind::h) {
    sums = h_sums(r, checkpoints, opts.jobs, opts.fast);
  } else {
    for (const auto& h : nu_histograms(checkpoints, opts.jobs)) sums.push_back(weighted_sum(h, r));
  }
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    ReportRow row;
    row.x = checkpoints[i];
    row.sum = sums[i];
    row.leading = leading_term(report.constant, r, row.x);
    row.ratio = to_real(row.sum) / row.leading;
    report.rows.push_back(std::move(row));
  }
  return report;
}

ConvergenceReport convergence_report(unsigned r, std::span<const std::uint64_t> checkpoints,
                                     const ReportOptions& opts) {
  return {partial_sum_report(SummandKind::two_pow_r_nu, r, checkpoints, opts),
          partial_sum_report(SummandKind::h, r, checkpoints, opts)};
}

std::string format_real(const Real& v, int digits) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace cyclocoef

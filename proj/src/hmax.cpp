#include "cyclocoef/hmax.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>
#include <string>

#include "cyclocoef/cyclotomic.hpp"
#include "cyclocoef/detail/checked_int.hpp"
#include "cyclocoef/detail/exponent_dp.hpp"
#include "cyclocoef/errors.hpp"

namespace cyclocoef {

std::string_view to_string(Method m) noexcept {
  return m == Method::bruteforce ? "bruteforce" : "exponent_dp";
}

TruncatedSeries divisor_subset_poly(const Factorization& n, std::span<const std::uint64_t> subset,
                                    unsigned order) {
  TruncatedSeries acc = TruncatedSeries::one(order);
  for (const std::uint64_t m : subset) {
    if (m == 0 || n.value() % m != 0)
      throw std::invalid_argument(std::to_string(m) + " does not divide " +
                                  std::to_string(n.value()));
    acc = acc * cyclotomic_truncated(m, order).series;
  }
  return acc;
}

TruncatedSeries divisor_subset_poly(std::uint64_t n, std::span<const std::uint64_t> subset,
                                    unsigned order) {
  return divisor_subset_poly(factorize(n), subset, order);
}

namespace {

void require_order(unsigned r) {
  if (r == 0) throw std::invalid_argument("coefficient index r must be positive");
}

// Is the ascending divisor list encoded by mask a lexicographically smaller than b?
bool lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const int low = std::countr_zero(a ^ b);
  if ((a >> low) & 1U) return (b >> low) != 0;  // b lacks the element; b wins if it is a prefix
  return (a >> low) == 0;
}

// Depth-first include/exclude over the divisors with one product buffer per
// depth. Int is std::int64_t (run() returns false on overflow) or Integer.
template <class Int>
class SubsetSearch {
 public:
  SubsetSearch(const std::vector<TruncatedSeries>& factors, unsigned r)
      : r_(r), width_(r + 1), count_(factors.size()) {
    factors_.resize(count_ * width_);
    identity_.resize(count_);
    for (std::size_t i = 0; i < count_; ++i) {
      bool is_one = true;
      for (unsigned j = 0; j <= r; ++j) {
        const Integer& c = factors[i][j];
        if constexpr (std::is_same_v<Int, Integer>) {
          factors_[i * width_ + j] = c;
        } else {
          factors_[i * width_ + j] = c.get_si();  // truncated factors are tiny
        }
        is_one = is_one && c == (j == 0 ? 1 : 0);
      }
      identity_[i] = is_one;
    }
    buffers_.resize((count_ + 1) * width_);
  }

  bool run() {
    std::vector<Int> one(width_, 0);
    one[0] = 1;
    return visit(0, one.data(), 0);
  }

  const Int& best() const { return best_; }
  std::uint64_t best_mask() const { return best_mask_; }

 private:
  std::span<const Int> factor(std::size_t i) const { return {factors_.data() + i * width_, width_}; }

  bool offer(Int value, std::uint64_t mask) {
    if constexpr (std::is_same_v<Int, std::int64_t>) {
      if (value == INT64_MIN) return false;
    }
    if (value < 0) value = -value;
    if (!found_ || value > best_ || (value == best_ && lex_less(mask, best_mask_))) {
      best_ = value;
      best_mask_ = mask;
      found_ = true;
    }
    return true;
  }

  bool visit(std::size_t i, const Int* current, std::uint64_t mask) {
    if (i == count_) return offer(current[r_], mask);
    const std::uint64_t with = mask | (std::uint64_t{1} << i);
    if (i + 1 == count_) {
      // Leaves: only the r-th coefficient of the last product is needed.
      if (!offer(current[r_], mask)) return false;
      if (identity_[i]) return offer(current[r_], with);
      Int c;
      if (!detail::product_coefficient<Int>({current, width_}, factor(i), r_, c)) return false;
      return offer(c, with);
    }
    if (!visit(i + 1, current, mask)) return false;
    if (identity_[i]) return visit(i + 1, current, with);
    Int* next = buffers_.data() + (i + 1) * width_;
    if (!detail::mul_trunc<Int>({current, width_}, factor(i), {next, width_})) return false;
    return visit(i + 1, next, with);
  }

  unsigned r_;
  std::size_t width_;
  std::size_t count_;
  std::vector<Int> factors_;
  std::vector<bool> identity_;
  std::vector<Int> buffers_;
  bool found_ = false;
  Int best_ = 0;
  std::uint64_t best_mask_ = 0;
};

HResult from_mask(unsigned r, std::uint64_t n, const std::vector<std::uint64_t>& divs,
                  Integer value, std::uint64_t mask) {
  HResult out{r, n, std::move(value), {}, Method::bruteforce};
  for (std::size_t i = 0; i < divs.size(); ++i)
    if ((mask >> i) & 1U) out.witness.push_back(divs[i]);
  return out;
}

}  // namespace

HResult h_bruteforce(unsigned r, const Factorization& n, const BruteforceOptions& opts) {
  require_order(r);
  if (opts.max_tau > 62) throw std::invalid_argument("max_tau must not exceed 62");
  if (n.tau() > opts.max_tau)
    throw CapExceeded("tau(n)", "too many divisors: tau(" + std::to_string(n.value()) +
                                    ") = " + std::to_string(n.tau()) + " exceeds the cap of " +
                                    std::to_string(opts.max_tau));
  const auto divs = divisors(n);
  std::vector<TruncatedSeries> factors;
  factors.reserve(divs.size());
  for (const std::uint64_t m : divs) factors.push_back(cyclotomic_truncated(m, r).series);

  const bool small = std::all_of(factors.begin(), factors.end(), [](const TruncatedSeries& s) {
    return std::all_of(s.coeffs().begin(), s.coeffs().end(), detail::fits_int64);
  });
  if (small) {
    SubsetSearch<std::int64_t> search(factors, r);
    if (search.run())
      return from_mask(r, n.value(), divs, Integer(static_cast<long>(search.best())),
                       search.best_mask());
  }
  SubsetSearch<Integer> search(factors, r);
  search.run();
  return from_mask(r, n.value(), divs, search.best(), search.best_mask());
}

HResult h_bruteforce(unsigned r, std::uint64_t n, const BruteforceOptions& opts) {
  return h_bruteforce(r, factorize(n), opts);
}

std::vector<ExponentVector> reachable_vectors(const Factorization& n, unsigned order,
                                              const FastOptions& opts) {
  require_order(order);
  detail::ReachableSet set(detail::contribution_groups(n, order), order, opts.max_vectors);
  std::vector<ExponentVector> out;
  out.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto v = set.vector(i);
    out.push_back({order, std::vector<int>(v.begin(), v.end())});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExponentVector> reachable_vectors(std::uint64_t n, unsigned order,
                                              const FastOptions& opts) {
  return reachable_vectors(factorize(n), order, opts);
}

HResult h_fast(unsigned r, const Factorization& n, const FastOptions& opts) {
  require_order(r);
  detail::ReachableSet set(detail::contribution_groups(n, r), r, opts.max_vectors);
  const detail::CoefficientEvaluator evaluate(r);

  std::size_t best_index = 0;
  std::int64_t best_small = -1;
  std::optional<Integer> best_big;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto k = set.vector(i);
    std::int64_t c;
    if (!best_big && evaluate.try_int64(k, c) && c != INT64_MIN) {
      c = c < 0 ? -c : c;
      if (c > best_small) {
        best_small = c;
        best_index = i;
      }
      continue;
    }
    Integer value = abs(evaluate(k));
    const Integer current = best_big ? *best_big : Integer(static_cast<long>(best_small));
    if (value > current) {
      best_big = std::move(value);
      best_index = i;
    }
  }
  Integer value = best_big ? *best_big : Integer(static_cast<long>(best_small));
  return {r, n.value(), std::move(value), set.witness(best_index), Method::exponent_dp};
}

HResult h_fast(unsigned r, std::uint64_t n, const FastOptions& opts) {
  return h_fast(r, factorize(n), opts);
}

Integer exponent_vector_coefficient(std::span<const int> k, unsigned r) {
  require_order(r);
  if (k.size() != r) throw std::invalid_argument("exponent vector length must equal r");
  return detail::CoefficientEvaluator(r)(k);
}

MobiusWitness mobius_witness(unsigned r, std::uint64_t n) {
  require_order(r);
  if (n <= 1) throw std::invalid_argument("mobius_witness: n must exceed 1");
  const auto f = factorize(n);
  MobiusWitness out;
  for (const std::uint64_t m : divisors(f))
    if (mobius(factorize(m)) == -1) out.subset.push_back(m);
  out.coefficient = divisor_subset_poly(f, out.subset, r)[r];
  return out;
}

Integer coefficient_upper_bound(unsigned r, std::uint64_t n) {
  require_order(r);
  if (n <= 1) throw std::invalid_argument("coefficient_upper_bound: n must exceed 1");
  const unsigned nu = factorize(n).nu();
  const std::int64_t k = std::int64_t{1} << (nu - 1);
  TruncatedSeries acc = TruncatedSeries::one(r);
  for (unsigned d = 1; d <= r; ++d) acc = acc * binomial_power(d, -k, r);
  return acc[r];
}

Integer witness_coefficient(const HResult& result) {
  return abs(divisor_subset_poly(result.n, result.witness, result.r)[result.r]);
}

}  // namespace cyclocoef

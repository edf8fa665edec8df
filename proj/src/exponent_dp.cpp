#include "cyclocoef/detail/exponent_dp.hpp"

#include <map>
#include <string>

#include "cyclocoef/errors.hpp"

namespace cyclocoef::detail {

namespace {

// mu(q) for q dividing n, using the primes of n.
int mobius_within(std::uint64_t q, const Factorization& n) {
  int sign = 1;
  for (const auto& f : n.factors()) {
    if (q % f.prime != 0) continue;
    q /= f.prime;
    if (q % f.prime == 0) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t mix(std::uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

std::uint64_t hash_vector(std::span<const int> v) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (int x : v) h = mix(h ^ static_cast<std::uint32_t>(x)) + 0x9e3779b97f4a7c15ULL;
  return h;
}

// Open addressing over indices into an external row-major store.
class VectorIndex {
 public:
  explicit VectorIndex(unsigned width) : width_(width) { rehash(16); }

  // Returns true if the row was absent (and records `row` for it).
  bool insert(std::span<const int> v, const std::vector<int>& store, std::uint32_t row) {
    if ((count_ + 1) * 2 > slots_.size()) rehash(slots_.size() * 2, store);
    std::size_t pos = hash_vector(v) & mask_;
    while (slots_[pos] != 0) {
      const int* existing = store.data() + static_cast<std::size_t>(slots_[pos] - 1) * width_;
      if (std::equal(v.begin(), v.end(), existing)) return false;
      pos = (pos + 1) & mask_;
    }
    slots_[pos] = row + 1;
    ++count_;
    return true;
  }

 private:
  void rehash(std::size_t capacity) {
    slots_.assign(capacity, 0);
    mask_ = capacity - 1;
  }

  void rehash(std::size_t capacity, const std::vector<int>& store) {
    std::vector<std::uint32_t> old = std::move(slots_);
    rehash(capacity);
    for (std::uint32_t slot : old) {
      if (slot == 0) continue;
      std::span<const int> v(store.data() + static_cast<std::size_t>(slot - 1) * width_, width_);
      std::size_t pos = hash_vector(v) & mask_;
      while (slots_[pos] != 0) pos = (pos + 1) & mask_;
      slots_[pos] = slot;
    }
  }

  unsigned width_;
  std::size_t count_ = 0;
  std::size_t mask_ = 0;
  std::vector<std::uint32_t> slots_;
};

void generate_partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& counts,
                         std::vector<std::vector<unsigned>>& out) {
  if (remaining == 0) {
    out.push_back(counts);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    ++counts[part - 1];
    generate_partitions(remaining - part, part, counts, out);
    --counts[part - 1];
  }
}

__extension__ using Wide = __int128;

// C(k, c) for integer k; false if it leaves the 64-bit range.
bool binomial_int64(std::int64_t k, unsigned c, std::int64_t& out) {
  Wide value = 1;
  for (unsigned i = 0; i < c; ++i) {
    value = value * (k - static_cast<std::int64_t>(i));
    value /= static_cast<Wide>(i + 1);  // exact
    if (value > INT64_MAX || value < INT64_MIN) return false;
  }
  out = static_cast<std::int64_t>(value);
  return true;
}

}  // namespace

std::vector<ContributionGroup> contribution_groups(const Factorization& n, unsigned order) {
  std::vector<ContributionGroup> groups;
  std::map<std::vector<int>, std::size_t> index;
  for (const std::uint64_t m : divisors(n)) {
    std::vector<int> v(order, 0);
    bool nonzero = false;
    for (std::uint64_t d = 1; d <= order && d <= m; ++d) {
      if (m % d != 0) continue;
      v[d - 1] = mobius_within(m / d, n);
      nonzero = nonzero || v[d - 1] != 0;
    }
    if (!nonzero) continue;
    auto [it, inserted] = index.try_emplace(v, groups.size());
    if (inserted) groups.push_back({std::move(v), {}});
    groups[it->second].members.push_back(m);
  }
  return groups;
}

ReachableSet::ReachableSet(std::vector<ContributionGroup> groups, unsigned order,
                           std::size_t max_vectors)
    : order_(order), groups_(std::move(groups)), store_(order, 0) {
  auto overflow = [&](std::size_t size) {
    throw CapExceeded("reachable vectors",
                      "reachable exponent-vector set exceeds " + std::to_string(max_vectors) +
                          " entries (reached " + std::to_string(size) + ")");
  };
  std::vector<int> candidate(order_);
  for (const auto& group : groups_) {
    const std::size_t previous = size();
    const std::size_t multiplicity = group.members.size();
    std::vector<int> next(store_);
    Layer layer;
    layer.parent.reserve(previous * 2);
    layer.multiple.reserve(previous * 2);
    VectorIndex table(order_);
    for (std::uint32_t e = 0; e < previous; ++e) {
      table.insert(vector(e), next, e);
      layer.parent.push_back(e);
      layer.multiple.push_back(0);
    }
    for (std::size_t j = 1; j <= multiplicity; ++j) {
      for (std::uint32_t e = 0; e < previous; ++e) {
        const auto base = vector(e);
        for (unsigned d = 0; d < order_; ++d)
          candidate[d] = base[d] + static_cast<int>(j) * group.vector[d];
        const auto row = static_cast<std::uint32_t>(next.size() / order_);
        // Append first so the table can compare against the store.
        next.insert(next.end(), candidate.begin(), candidate.end());
        if (table.insert(candidate, next, row)) {
          layer.parent.push_back(e);
          layer.multiple.push_back(static_cast<std::uint32_t>(j));
          if (row + 1 > max_vectors) overflow(row + 1);
        } else {
          next.resize(next.size() - order_);
        }
      }
    }
    store_ = std::move(next);
    layers_.push_back(std::move(layer));
  }
}

std::vector<std::uint64_t> ReachableSet::witness(std::size_t i) const {
  std::vector<std::uint64_t> subset;
  for (std::size_t g = layers_.size(); g-- > 0;) {
    const std::uint32_t j = layers_[g].multiple[i];
    const auto& members = groups_[g].members;
    subset.insert(subset.end(), members.begin(), members.begin() + j);
    i = layers_[g].parent[i];
  }
  std::sort(subset.begin(), subset.end());
  return subset;
}

CoefficientEvaluator::CoefficientEvaluator(unsigned r) : r_(r) {
  std::vector<unsigned> counts(r, 0);
  generate_partitions(r, r, counts, partitions_);
}

bool CoefficientEvaluator::try_int64(std::span<const int> k, std::int64_t& out) const {
  std::int64_t total = 0;
  for (const auto& c : partitions_) {
    std::int64_t term = 1;
    for (unsigned d = 0; d < r_ && term != 0; ++d) {
      if (c[d] == 0) continue;
      std::int64_t b;
      if (!binomial_int64(k[d], c[d], b)) return false;
      if (c[d] % 2 == 1) b = -b;
      if (__builtin_mul_overflow(term, b, &term)) return false;
    }
    if (__builtin_add_overflow(total, term, &total)) return false;
  }
  out = total;
  return true;
}

Integer CoefficientEvaluator::exact(std::span<const int> k) const {
  Integer total = 0;
  for (const auto& c : partitions_) {
    Integer term = 1;
    for (unsigned d = 0; d < r_ && term != 0; ++d) {
      if (c[d] == 0) continue;
      Integer b = generalized_binomial(Integer(k[d]), c[d]);
      if (c[d] % 2 == 1) b = -b;
      term *= b;
    }
    total += term;
  }
  return total;
}

Integer CoefficientEvaluator::operator()(std::span<const int> k) const {
  std::int64_t fast;
  if (try_int64(k, fast)) return Integer(static_cast<long>(fast));
  return exact(k);
}

}  // namespace cyclocoef::detail

#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "cyclocoef/arith.hpp"
#include "cyclocoef/series.hpp"

namespace cyclocoef::detail {

/// Divisors m of n sharing one contribution vector
/// v_m(d) = mu(m/d) for d | m, d <= order (0 otherwise).
struct ContributionGroup {
  std::vector<int> vector;
  std::vector<std::uint64_t> members;  // ascending
};

/// Groups with a nonzero vector, ordered by their smallest member.
std::vector<ContributionGroup> contribution_groups(const Factorization& n, unsigned order);

/// Iterated Minkowski sums {0..c_g} * v_g over the contribution groups.
/// Each layer is deduplicated through an open-addressing table over a flat
/// vector store; every vector remembers its parent in the previous layer
/// and the multiple of v_g that produced it, so a subset can be recovered.
class ReachableSet {
 public:
  ReachableSet(std::vector<ContributionGroup> groups, unsigned order, std::size_t max_vectors);

  unsigned order() const noexcept { return order_; }
  std::size_t size() const noexcept { return store_.size() / std::max(order_, 1u); }
  std::span<const int> vector(std::size_t i) const {
    return {store_.data() + i * order_, order_};
  }
  const std::vector<ContributionGroup>& groups() const noexcept { return groups_; }

  /// Ascending divisor subset reaching vector(i): the smallest members of each group.
  std::vector<std::uint64_t> witness(std::size_t i) const;

 private:
  struct Layer {
    std::vector<std::uint32_t> parent;
    std::vector<std::uint32_t> multiple;
  };

  unsigned order_;
  std::vector<ContributionGroup> groups_;
  std::vector<int> store_;  // final layer, row-major
  std::vector<Layer> layers_;
};

/// Coefficient of x^r in prod_d (1 - x^d)^{k(d)} via the partitions of r.
/// Runs in 64-bit arithmetic and falls back to exact integers on overflow.
class CoefficientEvaluator {
 public:
  explicit CoefficientEvaluator(unsigned r);

  Integer operator()(std::span<const int> k) const;
  /// 64-bit attempt; false on overflow.
  bool try_int64(std::span<const int> k, std::int64_t& out) const;
  Integer exact(std::span<const int> k) const;

  /// Partitions of r as multiplicity vectors c[d-1] = number of parts equal to d.
  const std::vector<std::vector<unsigned>>& partitions() const noexcept { return partitions_; }

 private:
  unsigned r_;
  std::vector<std::vector<unsigned>> partitions_;
};

}  // namespace cyclocoef::detail

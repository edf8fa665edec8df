#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace cyclocoef::detail {

/// Evaluates fn(lo, hi) on fixed-size chunks of [begin, end] using `jobs`
/// threads and returns the per-chunk results in chunk order. Chunk
/// boundaries do not depend on `jobs`, so any order-sensitive reduction
/// over the result is deterministic. The first exception by chunk index is
/// rethrown.
template <class T, class Fn>
std::vector<T> map_chunks(std::uint64_t begin, std::uint64_t end, std::uint64_t chunk,
                          unsigned jobs, Fn&& fn) {
  if (end < begin) return {};
  const std::uint64_t count = (end - begin) / chunk + 1;
  std::vector<T> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i; (i = next.fetch_add(1)) < count;) {
      const std::uint64_t lo = begin + i * chunk;
      const std::uint64_t hi = std::min(end, lo + chunk - 1);
      try {
        results[i] = fn(lo, hi);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(count, 1024))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace cyclocoef::detail

#pragma once

#include <stdexcept>
#include <string>

namespace cyclocoef {

/// Raised when a computation would exceed a configured resource cap
/// (number of divisors, reachable-set cardinality, sieve memory).
/// The message names the limiting quantity.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string quantity, std::string message)
      : std::runtime_error(std::move(message)), quantity_(std::move(quantity)) {}

  const std::string& quantity() const noexcept { return quantity_; }

 private:
  std::string quantity_;
};

}  // namespace cyclocoef

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclocoef/asympt.hpp"
#include "cyclocoef/hmax.hpp"

namespace cyclocoef::cli {

enum class Subcommand { h, cyclotomic, constant, sums, verify };
enum class OutputFormat { json, csv, text };
enum class HMethod { brute, fast, both };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCap = 2;
inline constexpr int kExitMismatch = 3;

struct RunConfig {
  Subcommand subcommand = Subcommand::h;
  std::optional<OutputFormat> format;  // per-subcommand default when unset
  unsigned jobs = 1;
  BruteforceOptions brute;
  FastOptions fast;

  unsigned r = 1;

  // h
  std::uint64_t n = 0;
  HMethod method = HMethod::fast;
  bool witness = false;

  // cyclotomic
  std::uint64_t m = 0;
  std::optional<unsigned> order;

  // constant, sums
  std::uint64_t prime_limit = 1'000'000;
  ConstantKind constant_kind = ConstantKind::g_at_1;

  // sums
  std::uint64_t x = 0;
  SummandKind kind = SummandKind::two_pow_r_nu;
  std::vector<std::uint64_t> checkpoints;

  // verify
  std::uint64_t n_max = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// args excludes the program name. Throws UsageError naming the offending
/// flag. Returns nullopt after printing help to `out`.
std::optional<RunConfig> parse_args(std::span<const std::string> args, std::ostream& out);

/// Executes a validated configuration. Cap errors propagate as CapExceeded.
int run(const RunConfig& config, std::ostream& out);

/// parse_args + run with exit codes: 0 success, 1 usage error, 2 cap or
/// resource error, 3 a verification mismatch.
int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cyclocoef::cli

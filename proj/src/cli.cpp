#include "cyclocoef/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <random>

#include "cyclocoef/arith.hpp"
#include "cyclocoef/cyclotomic.hpp"
#include "cyclocoef/detail/parallel.hpp"
#include "cyclocoef/errors.hpp"
#include "cyclocoef/series.hpp"

namespace cyclocoef::cli {

using Json = nlohmann::ordered_json;

namespace {

OutputFormat default_format(Subcommand s) {
  switch (s) {
    case Subcommand::sums:
      return OutputFormat::csv;
    case Subcommand::verify:
      return OutputFormat::text;
    default:
      return OutputFormat::json;
  }
}

void require_format(OutputFormat f, std::initializer_list<OutputFormat> allowed) {
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end())
    throw UsageError("--format: not supported by this subcommand");
}

Json witness_json(const std::vector<std::uint64_t>& w) {
  Json a = Json::array();
  for (auto m : w) a.push_back(m);
  return a;
}

std::string join_witness(const std::vector<std::uint64_t>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

int run_h(const RunConfig& c, OutputFormat fmt, std::ostream& out) {
  require_format(fmt, {OutputFormat::json, OutputFormat::csv});
  const auto f = factorize(c.n);
  std::optional<HResult> brute, fast;
  if (c.method != HMethod::fast) brute = h_bruteforce(c.r, f, c.brute);
  if (c.method != HMethod::brute) fast = h_fast(c.r, f, c.fast);
  const HResult& shown = brute ? *brute : *fast;
  const bool agree = !(brute && fast) || brute->value == fast->value;
  const char* method = c.method == HMethod::both    ? "both"
                       : c.method == HMethod::brute ? "bruteforce"
                                                    : "exponent_dp";
  if (fmt == OutputFormat::json) {
    Json j;
    j["r"] = c.r;
    j["n"] = c.n;
    j["value"] = shown.value.get_str();
    if (c.witness) j["witness"] = witness_json(shown.witness);
    j["method"] = method;
    if (brute && fast) {
      j["agree"] = agree;
      if (!agree) j["exponent_dp_value"] = fast->value.get_str();
    }
    out << j.dump(2) << '\n';
  } else {
    out << "r,n,value,method" << (c.witness ? ",witness" : "") << '\n';
    out << c.r << ',' << c.n << ',' << shown.value.get_str() << ',' << method;
    if (c.witness) out << ',' << join_witness(shown.witness);
    out << '\n';
  }
  return agree ? kExitOk : kExitMismatch;
}

int run_cyclotomic(const RunConfig& c, OutputFormat fmt, std::ostream& out) {
  require_format(fmt, {OutputFormat::json, OutputFormat::csv});
  std::vector<std::string> coeffs;
  if (c.order) {
    const auto truncated = cyclotomic_truncated(c.m, *c.order);
    for (const auto& v : truncated.series.coeffs()) coeffs.push_back(v.get_str());
  } else {
    for (const auto v : cyclotomic_full(c.m)) coeffs.push_back(std::to_string(v));
  }
  if (fmt == OutputFormat::json) {
    Json j;
    j["m"] = c.m;
    j["form"] = c.order ? "truncated" : "full";
    if (c.order) j["order"] = *c.order;
    j["coefficients"] = coeffs;
    out << j.dump(2) << '\n';
  } else {
    out << "power,coefficient\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i) out << i << ',' << coeffs[i] << '\n';
  }
  return kExitOk;
}

int run_constant(const RunConfig& c, OutputFormat fmt, std::ostream& out) {
  require_format(fmt, {OutputFormat::json, OutputFormat::csv});
  const auto est = c.constant_kind == ConstantKind::g_at_1 ? euler_product(c.r, c.prime_limit)
                                                           : asymptotic_constant(c.r, c.prime_limit);
  const char* kind = est.kind == ConstantKind::g_at_1 ? "g" : "c";
  const std::string value10 = format_real(est.value, 10);
  const std::string tail = format_real(est.tail_bound, 3);
  if (fmt == OutputFormat::json) {
    Json j;
    j["r"] = c.r;
    j["kind"] = kind;
    j["value"] = std::stod(value10);
    j["value_digits"] = format_real(est.value, 40);
    j["tail_bound"] = std::stod(tail);
    j["prime_limit"] = c.prime_limit;
    out << j.dump(2) << '\n';
  } else {
    out << "r,kind,prime_limit,value,tail_bound\n"
        << c.r << ',' << kind << ',' << c.prime_limit << ',' << value10 << ',' << tail << '\n';
  }
  return kExitOk;
}

int run_sums(const RunConfig& c, OutputFormat fmt, std::ostream& out) {
  require_format(fmt, {OutputFormat::json, OutputFormat::csv});
  std::vector<std::uint64_t> xs = c.checkpoints;
  if (c.x != 0 && (xs.empty() || xs.back() < c.x)) xs.push_back(c.x);
  ReportOptions opts;
  opts.prime_limit = c.prime_limit;
  opts.jobs = c.jobs;
  opts.fast = c.fast;
  const auto report = partial_sum_report(c.kind, c.r, xs, opts);
  if (fmt == OutputFormat::csv) {
    out << "x,sum,leading,ratio\n";
    for (const auto& row : report.rows)
      out << row.x << ',' << row.sum.get_str() << ',' << format_real(row.leading) << ','
          << format_real(row.ratio) << '\n';
  } else {
    Json j;
    j["r"] = c.r;
    j["kind"] = std::string(to_string(c.kind));
    j["prime_limit"] = c.prime_limit;
    j["rows"] = Json::array();
    for (const auto& row : report.rows)
      j["rows"].push_back({{"x", row.x},
                           {"sum", row.sum.get_str()},
                           {"leading", format_real(row.leading)},
                           {"ratio", format_real(row.ratio)}});
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

struct SweepCounts {
  std::uint64_t oracle_checked = 0, oracle_agree = 0, oracle_skipped = 0;
  std::uint64_t closed_checked = 0, closed_ok = 0;
  std::uint64_t sandwich_checked = 0, sandwich_ok = 0;

  SweepCounts& operator+=(const SweepCounts& o) {
    oracle_checked += o.oracle_checked;
    oracle_agree += o.oracle_agree;
    oracle_skipped += o.oracle_skipped;
    closed_checked += o.closed_checked;
    closed_ok += o.closed_ok;
    sandwich_checked += o.sandwich_checked;
    sandwich_ok += o.sandwich_ok;
    return *this;
  }
};

SweepCounts sweep(const RunConfig& c, std::uint64_t lo, std::uint64_t hi) {
  SweepCounts s;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    const auto f = factorize(n);
    const HResult fast = h_fast(c.r, f, c.fast);
    if (f.tau() <= c.brute.max_tau) {
      ++s.oracle_checked;
      s.oracle_agree += h_bruteforce(c.r, f, c.brute).value == fast.value;
    } else {
      ++s.oracle_skipped;
    }
    const Integer h1 = c.r == 1 ? fast.value : h_fast(1, f, c.fast).value;
    ++s.closed_checked;
    s.closed_ok += h1 == (Integer(1) << (f.nu() - 1));
    ++s.sandwich_checked;
    const Integer lower = abs(mobius_witness(c.r, n).coefficient);
    s.sandwich_ok += lower <= fast.value && fast.value <= coefficient_upper_bound(c.r, n);
  }
  return s;
}

TruncatedSeries random_nonnegative(std::mt19937_64& rng, unsigned order) {
  std::uniform_int_distribution<int> coeff(0, 9);
  std::vector<Integer> c(order + 1);
  for (auto& v : c) v = coeff(rng);
  return TruncatedSeries(order, std::move(c));
}

// Random f with |f_i| <= g_i.
TruncatedSeries random_dominated(std::mt19937_64& rng, const TruncatedSeries& g) {
  std::vector<Integer> c(g.order() + 1);
  for (unsigned i = 0; i <= g.order(); ++i) {
    const long bound = g[i].get_si();
    c[i] = std::uniform_int_distribution<long>(-bound, bound)(rng);
  }
  return TruncatedSeries(g.order(), std::move(c));
}

bool domination_trial(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  const unsigned order = std::uniform_int_distribution<unsigned>(0, 8)(rng);
  const unsigned count = std::uniform_int_distribution<unsigned>(1, 5)(rng);
  TruncatedSeries f = TruncatedSeries::one(order), g = TruncatedSeries::one(order);
  for (unsigned j = 0; j < count; ++j) {
    const auto gj = random_nonnegative(rng, order);
    f = f * random_dominated(rng, gj);
    g = g * gj;
  }
  return dominated_by(f, g);
}

int run_verify(const RunConfig& c, OutputFormat fmt, std::ostream& out) {
  require_format(fmt, {OutputFormat::text, OutputFormat::json});
  SweepCounts total;
  if (c.n_max >= 2) {
    const auto parts = detail::map_chunks<SweepCounts>(
        2, c.n_max, 64, c.jobs, [&](std::uint64_t lo, std::uint64_t hi) { return sweep(c, lo, hi); });
    for (const auto& p : parts) total += p;
  }
  const auto trial_parts = detail::map_chunks<std::uint64_t>(
      0, c.trials == 0 ? 0 : c.trials - 1, 256, c.jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t ok = 0;
        for (std::uint64_t t = lo; t <= hi; ++t) ok += domination_trial(c.seed, t);
        return ok;
      });
  std::uint64_t domination_ok = 0;
  if (c.trials > 0)
    for (auto v : trial_parts) domination_ok += v;

  const bool pass = total.oracle_agree == total.oracle_checked &&
                    total.closed_ok == total.closed_checked &&
                    total.sandwich_ok == total.sandwich_checked && domination_ok == c.trials;
  if (fmt == OutputFormat::json) {
    Json j;
    j["r"] = c.r;
    j["n_max"] = c.n_max;
    j["seed"] = c.seed;
    j["oracle_equivalence"] = {{"agree", total.oracle_agree},
                               {"checked", total.oracle_checked},
                               {"skipped_over_tau_cap", total.oracle_skipped}};
    j["closed_form_r1"] = {{"ok", total.closed_ok}, {"checked", total.closed_checked}};
    j["sandwich"] = {{"ok", total.sandwich_ok}, {"checked", total.sandwich_checked}};
    j["domination"] = {{"ok", domination_ok}, {"checked", c.trials}};
    j["pass"] = pass;
    out << j.dump(2) << '\n';
  } else {
    out << "oracle equivalence: " << total.oracle_agree << '/' << total.oracle_checked << " ("
        << total.oracle_skipped << " skipped above tau cap " << c.brute.max_tau << ")\n";
    out << "closed form H(1,n) = 2^(nu(n)-1): " << total.closed_ok << '/' << total.closed_checked
        << '\n';
    out << "sandwich holds: " << total.sandwich_ok << '/' << total.sandwich_checked << '\n';
    out << "product domination: " << domination_ok << '/' << c.trials << " (seed " << c.seed
        << ")\n";
    out << (pass ? "all checks passed" : "VERIFICATION FAILED") << '\n';
  }
  return pass ? kExitOk : kExitMismatch;
}

}  // namespace

std::optional<RunConfig> parse_args(std::span<const std::string> args, std::ostream& out) {
  RunConfig cfg;
  CLI::App app{"Exact maximal coefficients of divisors of x^n - 1 and their average order",
               "cyclocoef"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--max-tau", cfg.brute.max_tau, "Brute force refuses n with more divisors")
      ->envname("CYCLOCOEF_MAX_TAU")
      ->check(CLI::Range(1u, 62u));
  app.add_option("--max-vectors", cfg.fast.max_vectors, "Cap on the reachable exponent-vector set")
      ->envname("CYCLOCOEF_MAX_VECTORS")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1'000'000'000}));

  auto* h = app.add_subcommand("h", "Compute H(r, n)");
  h->add_option("--r", cfg.r, "Coefficient index")->required()->check(CLI::Range(1u, 64u));
  h->add_option("--n", cfg.n, "Exponent n of x^n - 1")->required()->check(CLI::PositiveNumber);
  std::string method = "fast";
  h->add_option("--method", method, "brute, fast or both")
      ->check(CLI::IsMember({"brute", "fast", "both"}));
  h->add_flag("--witness", cfg.witness, "Include the witness divisor subset");

  auto* cyc = app.add_subcommand("cyclotomic", "Print Phi_m, or delta(m) Phi_m mod x^(order+1)");
  cyc->add_option("m", cfg.m, "Index m")->required()->check(CLI::PositiveNumber);
  cyc->add_option("--order", cfg.order, "Truncation order")->check(CLI::Range(0u, 4096u));

  auto* cst = app.add_subcommand("constant", "Evaluate the Euler-product constant");
  cst->add_option("--r", cfg.r)->required()->check(CLI::Range(1u, kMaxAsymptoticR));
  cst->add_option("--prime-limit", cfg.prime_limit)->check(CLI::Range(std::uint64_t{2}, kMaxSieveLimit));
  std::string constant_kind = "g";
  cst->add_option("--kind", constant_kind, "g: g(1); c: the asymptotic constant c(r)")
      ->check(CLI::IsMember({"g", "c"}));

  auto* sums = app.add_subcommand("sums", "Partial sums against their leading asymptotic term");
  sums->add_option("--r", cfg.r)->required()->check(CLI::Range(1u, kMaxAsymptoticR));
  sums->add_option("--x", cfg.x, "Upper end of the summation")->check(CLI::Range(std::uint64_t{2}, kMaxSieveLimit));
  std::string kind = "nu";
  sums->add_option("--kind", kind, "h: H(r,n); nu: 2^(r nu(n))")->check(CLI::IsMember({"h", "nu"}));
  sums->add_option("--checkpoints", cfg.checkpoints, "Increasing list of x values")
      ->check(CLI::Range(std::uint64_t{2}, kMaxSieveLimit));
  sums->add_option("--prime-limit", cfg.prime_limit)->check(CLI::Range(std::uint64_t{2}, kMaxSieveLimit));

  auto* ver = app.add_subcommand("verify", "Range verification sweep");
  ver->add_option("--r", cfg.r)->required()->check(CLI::Range(1u, 64u));
  ver->add_option("--n-max", cfg.n_max)->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1'000'000'000}));
  ver->add_option("--seed", cfg.seed, "Seed for randomized domination trials");
  ver->add_option("--trials", cfg.trials, "Number of randomized domination trials");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (h->parsed()) {
    cfg.subcommand = Subcommand::h;
    cfg.method = method == "brute" ? HMethod::brute : method == "both" ? HMethod::both : HMethod::fast;
  } else if (cyc->parsed()) {
    cfg.subcommand = Subcommand::cyclotomic;
    if (!cfg.order && cfg.m > kMaxFullCyclotomic)
      throw UsageError("m: the full polynomial is limited to m <= " +
                       std::to_string(kMaxFullCyclotomic) + "; pass --order");
  } else if (cst->parsed()) {
    cfg.subcommand = Subcommand::constant;
    cfg.constant_kind = constant_kind == "g" ? ConstantKind::g_at_1 : ConstantKind::c_of_r;
    if (cfg.prime_limit <= 2 * ((std::uint64_t{1} << cfg.r) - 1))
      throw UsageError("--prime-limit: must exceed 2(2^r - 1)");
  } else if (sums->parsed()) {
    cfg.subcommand = Subcommand::sums;
    cfg.kind = kind == "h" ? SummandKind::h : SummandKind::two_pow_r_nu;
    if (cfg.x == 0 && cfg.checkpoints.empty())
      throw UsageError("--x: give --x or --checkpoints");
    if (!std::is_sorted(cfg.checkpoints.begin(), cfg.checkpoints.end(), std::less_equal<>{}))
      throw UsageError("--checkpoints: values must be strictly increasing");
    if (cfg.x != 0 && !cfg.checkpoints.empty() && cfg.x < cfg.checkpoints.back())
      throw UsageError("--x: must not be below the last checkpoint");
    if (cfg.prime_limit <= 2 * ((std::uint64_t{1} << cfg.r) - 1))
      throw UsageError("--prime-limit: must exceed 2(2^r - 1)");
  } else {
    cfg.subcommand = Subcommand::verify;
  }
  if (!format.empty())
    cfg.format = format == "json" ? OutputFormat::json
                 : format == "csv" ? OutputFormat::csv
                                   : OutputFormat::text;
  return cfg;
}

int run(const RunConfig& config, std::ostream& out) {
  const OutputFormat fmt = config.format.value_or(default_format(config.subcommand));
  switch (config.subcommand) {
    case Subcommand::h:
      return run_h(config, fmt, out);
    case Subcommand::cyclotomic:
      return run_cyclotomic(config, fmt, out);
    case Subcommand::constant:
      return run_constant(config, fmt, out);
    case Subcommand::sums:
      return run_sums(config, fmt, out);
    case Subcommand::verify:
      return run_verify(config, fmt, out);
  }
  return kExitUsage;
}

int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  try {
    const auto config = parse_args(args, out);
    if (!config) return kExitOk;
    return run(*config, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "cap exceeded (" << e.quantity() << "): " << e.what() << "\n";
    return kExitCap;
  } catch (const std::bad_alloc&) {
    err << "out of memory\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace cyclocoef::cli

#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "cyclocoef/cli.hpp"

using namespace cyclocoef::cli;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("h prints value, witness and method") {
  const auto o = call({"h", "--r", "1", "--n", "6", "--method", "both", "--witness"});
  REQUIRE(o.code == kExitOk);
  const auto j = Json::parse(o.out);
  CHECK(j["value"] == "2");
  CHECK(j["witness"] == Json::array({1, 6}));
  CHECK(j["method"] == "both");
  CHECK(j["agree"] == true);

  const auto fast = Json::parse(call({"h", "--r", "3", "--n", "210"}).out);
  CHECK(fast["value"] == "84");
  CHECK(fast["method"] == "exponent_dp");
  CHECK_FALSE(fast.contains("witness"));
}

TEST_CASE("h csv") {
  const auto o = call({"--format", "csv", "h", "--r", "2", "--n", "30"});
  CHECK(o.code == kExitOk);
  CHECK(o.out == "r,n,value,method\n2,30,8,exponent_dp\n");
}

TEST_CASE("usage errors name the flag") {
  auto o = call({"h", "--r", "0", "--n", "6"});
  CHECK(o.code == kExitUsage);
  CHECK(o.err.find("--r") != std::string::npos);

  o = call({"h", "--n", "6"});
  CHECK(o.code == kExitUsage);
  CHECK(o.err.find("--r") != std::string::npos);

  o = call({"sums", "--r", "1", "--checkpoints", "100", "10"});
  CHECK(o.code == kExitUsage);
  CHECK(o.err.find("--checkpoints") != std::string::npos);

  o = call({"constant", "--r", "2", "--prime-limit", "5"});
  CHECK(o.code == kExitUsage);
  CHECK(o.err.find("--prime-limit") != std::string::npos);

  o = call({"--format", "text", "h", "--r", "1", "--n", "6"});
  CHECK(o.code == kExitUsage);
  CHECK(o.err.find("--format") != std::string::npos);

  CHECK(call({"frobnicate"}).code == kExitUsage);
  CHECK(call({"cyclotomic", "200000"}).code == kExitUsage);
}

TEST_CASE("help exits cleanly") {
  const auto o = call({"--help"});
  CHECK(o.code == kExitOk);
  CHECK(o.out.find("cyclotomic") != std::string::npos);
}

TEST_CASE("caps exit with code 2") {
  auto o = call({"h", "--r", "1", "--n", "720720", "--method", "brute"});
  CHECK(o.code == kExitCap);
  CHECK(o.err.find("tau") != std::string::npos);

  o = call({"--max-vectors", "50", "h", "--r", "4", "--n", "720720"});
  CHECK(o.code == kExitCap);

  o = call({"--max-vectors", "50", "sums", "--r", "3", "--x", "1000", "--kind", "h"});
  CHECK(o.code == kExitCap);
  CHECK(o.err.find("at n = ") != std::string::npos);
}

TEST_CASE("caps are configurable through the environment") {
  ::setenv("CYCLOCOEF_MAX_TAU", "4", 1);
  const auto o = call({"h", "--r", "1", "--n", "30", "--method", "brute"});
  ::unsetenv("CYCLOCOEF_MAX_TAU");
  CHECK(o.code == kExitCap);
  CHECK(call({"h", "--r", "1", "--n", "30", "--method", "brute"}).code == kExitOk);
}

TEST_CASE("cyclotomic") {
  auto j = Json::parse(call({"cyclotomic", "105"}).out);
  CHECK(j["form"] == "full");
  CHECK(j["coefficients"][7] == "-2");
  CHECK(j["coefficients"].size() == 49);

  j = Json::parse(call({"cyclotomic", "6", "--order", "3"}).out);
  CHECK(j["coefficients"] == Json::array({"1", "-1", "1", "0"}));

  const auto csv = call({"--format", "csv", "cyclotomic", "1"}).out;
  CHECK(csv == "power,coefficient\n0,-1\n1,1\n");
}

TEST_CASE("constant") {
  const auto j = Json::parse(call({"constant", "--r", "1", "--prime-limit", "100000"}).out);
  CHECK(j["kind"] == "g");
  CHECK(j["value"].get<double>() == doctest::Approx(0.6079271).epsilon(1e-5));
  CHECK(j["tail_bound"].get<double>() == doctest::Approx(2e-5));
  const auto c = Json::parse(call({"constant", "--r", "1", "--kind", "c", "--prime-limit", "100000"}).out);
  CHECK(c["value"].get<double>() == doctest::Approx(0.30396).epsilon(1e-4));
}

TEST_CASE("sums") {
  const auto o = call({"sums", "--r", "1", "--kind", "h", "--checkpoints", "10", "100", "--x", "1000"});
  REQUIRE(o.code == kExitOk);
  std::istringstream lines(o.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "x,sum,leading,ratio");
  CHECK(rows[1].rfind("10,12,", 0) == 0);
  CHECK(rows[2].rfind("100,180,", 0) == 0);
  CHECK(rows[3].rfind("1000,2494,", 0) == 0);

  const auto j = Json::parse(call({"--format", "json", "sums", "--r", "1", "--x", "1000"}).out);
  CHECK(j["kind"] == "nu");
  CHECK(j["rows"][0]["sum"] == "4987");
}

TEST_CASE("verify") {
  const auto o = call({"verify", "--r", "2", "--n-max", "300", "--trials", "200", "--seed", "9"});
  CHECK(o.code == kExitOk);
  CHECK(o.out.find("oracle equivalence: 299/299") != std::string::npos);
  CHECK(o.out.find("product domination: 200/200 (seed 9)") != std::string::npos);
  CHECK(o.out.find("all checks passed") != std::string::npos);

  const auto j = Json::parse(call({"--format", "json", "verify", "--r", "1", "--n-max", "100"}).out);
  CHECK(j["pass"] == true);
  CHECK(j["closed_form_r1"]["ok"] == 99);
}

TEST_CASE("output does not depend on --jobs") {
  const std::vector<std::vector<std::string>> commands{
      {"verify", "--r", "3", "--n-max", "400", "--trials", "500"},
      {"sums", "--r", "2", "--kind", "h", "--checkpoints", "1000", "50000", "--prime-limit", "10000"},
      {"sums", "--r", "1", "--x", "200000"}};
  for (const auto& cmd : commands) {
    auto one = cmd, eight = cmd;
    one.insert(one.begin(), {"--jobs", "1"});
    eight.insert(eight.begin(), {"--jobs", "8"});
    const auto a = call(one), b = call(eight);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
  }
}

#include <doctest.h>

#include <random>

#include "cyclocoef/series.hpp"
#include "oracles.hpp"

using namespace cyclocoef;

namespace {

TruncatedSeries S(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  const auto order = static_cast<unsigned>(v.size() - 1);
  return TruncatedSeries(order, std::move(v));
}

TruncatedSeries random_series(std::mt19937_64& rng, unsigned order, long lo, long hi) {
  std::uniform_int_distribution<long> coeff(lo, hi);
  std::vector<Integer> c(order + 1);
  for (auto& v : c) v = coeff(rng);
  return TruncatedSeries(order, std::move(c));
}

}  // namespace

TEST_CASE("ts_one") {
  CHECK(ts_one(0) == S({1}));
  CHECK(ts_one(3) == S({1, 0, 0, 0}));
}

TEST_CASE("ts_mul examples") {
  CHECK(ts_mul(S({1, -1, 0, 0, 0}), S({1, 1, 1, 1, 1})) == S({1, 0, 0, 0, 0}));
  CHECK(ts_mul(S({1, 1}), S({1, 1})) == S({1, 2}));
  CHECK(ts_mul(S({1, 2, 2, 1}), S({1, 0, 0, 0})) == S({1, 2, 2, 1}));
  CHECK_THROWS_AS(ts_mul(S({1, 1}), S({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("construction validates the coefficient count") {
  CHECK_THROWS_AS(TruncatedSeries(3, std::vector<Integer>(3)), std::invalid_argument);
  CHECK(TruncatedSeries(2) == S({0, 0, 0}));
}

TEST_CASE("binomial_power examples") {
  CHECK(binomial_power(1, -2, 4) == S({1, 2, 3, 4, 5}));
  CHECK(binomial_power(2, 1, 4) == S({1, 0, -1, 0, 0}));
  CHECK(binomial_power(1, 3, 3) == S({1, -3, 3, -1}));
  CHECK(binomial_power(7, -5, 3) == ts_one(3));
  CHECK(binomial_power(1, 0, 2) == ts_one(2));
  CHECK_THROWS_AS(binomial_power(0, 1, 2), std::invalid_argument);
}

TEST_CASE("dominated_by examples") {
  CHECK(dominated_by(S({1, -1, 0}), S({1, 1, 1})));
  CHECK_FALSE(dominated_by(S({1, 2}), S({1, 1})));
  CHECK(dominated_by(S({3, 0, 5}), S({3, 0, 5})));
  CHECK_FALSE(dominated_by(S({0, 0, 1}), S({0, 0, -1})));
  CHECK_THROWS_AS(dominated_by(S({1}), S({1, 1})), std::invalid_argument);
}

TEST_CASE("one is the multiplicative identity") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const unsigned order = t % 10;
    const auto f = random_series(rng, order, -50, 50);
    REQUIRE(ts_one(order) * f == f);
    REQUIRE(f * ts_one(order) == f);
  }
}

TEST_CASE("product of dominated factors is dominated by the product of dominators") {
  std::mt19937_64 rng(20171027);
  for (int t = 0; t < 2000; ++t) {
    const unsigned order = std::uniform_int_distribution<unsigned>(0, 10)(rng);
    const unsigned count = std::uniform_int_distribution<unsigned>(1, 6)(rng);
    TruncatedSeries f = ts_one(order), g = ts_one(order);
    for (unsigned j = 0; j < count; ++j) {
      const auto gj = random_series(rng, order, 0, 20);
      std::vector<Integer> fc(order + 1);
      for (unsigned i = 0; i <= order; ++i) {
        const long b = gj[i].get_si();
        fc[i] = std::uniform_int_distribution<long>(-b, b)(rng);
      }
      const TruncatedSeries fj(order, std::move(fc));
      REQUIRE(dominated_by(fj, gj));
      f = f * fj;
      g = g * gj;
    }
    REQUIRE(dominated_by(f, g));
  }
}

TEST_CASE("binomial powers with opposite exponents are inverse") {
  for (std::uint64_t d = 1; d <= 5; ++d)
    for (std::int64_t e = -30; e <= 30; ++e)
      for (unsigned order = 0; order <= 12; ++order)
        REQUIRE(binomial_power(d, e, order) * binomial_power(d, -e, order) == ts_one(order));
}

TEST_CASE("product is commutative and associative") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const unsigned order = t % 9;
    const auto a = random_series(rng, order, -1000, 1000);
    const auto b = random_series(rng, order, -1000, 1000);
    const auto c = random_series(rng, order, -1000, 1000);
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
  }
}

TEST_CASE("negative binomial coefficients match Pascal's triangle") {
  const auto rows = oracle::pascal(80);
  for (std::int64_t k = 1; k <= 40; ++k) {
    const auto s = binomial_power(1, -k, 30);
    for (unsigned j = 0; j <= 30; ++j) REQUIRE(s[j] == rows[k - 1 + j][j]);
  }
}

TEST_CASE("coefficients beyond 64 bits stay exact") {
  // (1 - x)^{-2^40}: coefficient of x^5 is C(2^40 + 4, 5)
  const std::int64_t k = std::int64_t{1} << 40;
  const auto s = binomial_power(1, -k, 5);
  Integer expected = 1;
  for (int i = 0; i < 5; ++i) expected *= Integer(static_cast<long>(k + i));
  expected /= 120;
  CHECK(s[5] == expected);
  CHECK(s[5] > Integer("9223372036854775807"));
  CHECK(generalized_binomial(Integer(-3), 2) == 6);
  CHECK(generalized_binomial(Integer(2), 3) == 0);
}

TEST_CASE("negation flips every coefficient") {
  CHECK(-S({1, -2, 3}) == S({-1, 2, -3}));
  CHECK(to_string(S({1, -2, 0})) == "[1,-2,0]");
}

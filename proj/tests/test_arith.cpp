#include <doctest.h>

#include <random>

#include "cyclocoef/arith.hpp"
#include "cyclocoef/errors.hpp"
#include "oracles.hpp"

using namespace cyclocoef;

TEST_CASE("factorize small and primorial inputs") {
  CHECK(factorize(1).factors().empty());
  CHECK(factorize(1).value() == 1);

  const auto twelve = factorize(12);
  REQUIRE(twelve.factors().size() == 2);
  CHECK(twelve.factors()[0] == PrimePower{2, 2});
  CHECK(twelve.factors()[1] == PrimePower{3, 1});

  // 2*3*5*7*11*13*17*19
  const auto primorial = factorize(9699690);
  const std::vector<PrimePower> expected{{2, 1},  {3, 1},  {5, 1},  {7, 1},
                                         {11, 1}, {13, 1}, {17, 1}, {19, 1}};
  CHECK(std::vector<PrimePower>(primorial.factors().begin(), primorial.factors().end()) ==
        expected);
  CHECK(primorial.nu() == 8);
  CHECK(primorial.tau() == 256);

  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize large semiprime and prime power") {
  const auto f = factorize(999'999'937ULL * 999'999'929ULL);
  REQUIRE(f.nu() == 2);
  CHECK(f.factors()[0].prime == 999'999'929ULL);
  CHECK(f.factors()[1].prime == 999'999'937ULL);
  const auto g = factorize(1ULL << 62);
  CHECK(g.factors()[0] == PrimePower{2, 62});
}

TEST_CASE("Factorization rejects broken invariants") {
  CHECK_THROWS_AS(Factorization(12, {{3, 1}, {2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Factorization(12, {{2, 1}, {3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Factorization(12, {{2, 0}, {3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Factorization(0, {}), std::invalid_argument);
  CHECK_NOTHROW(Factorization(1, {}));
}

TEST_CASE("divisors are ascending") {
  CHECK(divisors(factorize(1)) == std::vector<std::uint64_t>{1});
  CHECK(divisors(factorize(12)) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(factorize(30)) == std::vector<std::uint64_t>{1, 2, 3, 5, 6, 10, 15, 30});
}

TEST_CASE("mobius and delta") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(30) == -1);
  CHECK(mobius(12) == 0);

  CHECK(delta(1) == -1);
  CHECK(delta(2) == 1);
  CHECK(delta(1'000'000) == 1);
  CHECK_THROWS_AS(delta(0), std::invalid_argument);
}

TEST_CASE("arithmetic functions agree with trial-loop recomputation up to 10^4") {
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    const auto f = factorize(n);
    REQUIRE(f.nu() == oracle::nu(n));
    REQUIRE(f.tau() == oracle::tau(n));
    REQUIRE(mobius(f) == oracle::mu(n));
    REQUIRE(divisors(f) == oracle::divisor_list(n));
  }
}

TEST_CASE("mobius sums over divisors") {
  for (std::uint64_t n = 2; n <= 10'000; ++n) {
    const auto f = factorize(n);
    int total = 0;
    std::uint64_t plus = 0, minus = 0;
    for (auto d : divisors(f)) {
      const int m = mobius(factorize(d));
      total += m;
      plus += m == 1;
      minus += m == -1;
    }
    REQUIRE(total == 0);
    REQUIRE(plus == (std::uint64_t{1} << (f.nu() - 1)));
    REQUIRE(minus == plus);
  }
}

TEST_CASE("sieve_nu") {
  CHECK(sieve_nu(1)[1] == 0);

  const auto ten = sieve_nu(10);
  const std::vector<unsigned> expected{0, 1, 1, 1, 1, 2, 1, 1, 1, 2};
  for (std::uint64_t n = 1; n <= 10; ++n) CHECK(ten[n] == expected[n - 1]);

  CHECK(sieve_nu(210)[210] == 4);
  CHECK_THROWS_AS(sieve_nu(0), std::invalid_argument);
  CHECK_THROWS_AS(sieve_nu(kMaxSieveLimit + 1), CapExceeded);
}

TEST_CASE("sieve_nu matches factorize on random samples") {
  constexpr std::uint64_t limit = 2'000'000;
  const auto sieve = sieve_nu(limit);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(1, limit);
  for (int i = 0; i < 1000; ++i) {
    const auto n = pick(rng);
    REQUIRE(sieve[n] == factorize(n).nu());
  }
  for (auto p : primes_up_to(1000)) CHECK(sieve[p] == 1);
}

TEST_CASE("smallest factor sieve reproduces trial division") {
  const SmallestFactorSieve sieve(100'000);
  for (std::uint64_t n = 1; n <= 100'000; ++n) REQUIRE(sieve.factorize(n) == factorize(n));
  CHECK_THROWS_AS(sieve.factorize(0), std::out_of_range);
  CHECK_THROWS_AS(sieve.factorize(100'001), std::out_of_range);
}

TEST_CASE("primes_up_to") {
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(primes_up_to(1'000'000).size() == 78'498);
}

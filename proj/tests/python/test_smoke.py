import math

import pytest

import cyclocoef


def test_h_examples():
    res = cyclocoef.h(1, 6, method="brute")
    assert res["value"] == 2
    assert res["witness"] == [1, 6]
    assert res["method"] == "bruteforce"
    assert cyclocoef.h(3, 210)["value"] == 84
    assert cyclocoef.h(2, 1)["value"] == 0


def test_exact_integers_beyond_64_bits():
    # 2^(nu - 1) for the product of the first 15 primes
    primorial = math.prod([2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47])
    assert cyclocoef.coefficient_upper_bound(1, primorial) == 2**14
    big = cyclocoef.coefficient_upper_bound(6, primorial)
    assert isinstance(big, int) and big > 2**63


def test_cyclotomic():
    assert cyclocoef.cyclotomic(105)[7] == -2
    assert cyclocoef.cyclotomic(6, order=3) == [1, -1, 1, 0]
    assert cyclocoef.cyclotomic(1) == [-1, 1]


def test_arithmetic():
    assert cyclocoef.factorize(12) == [(2, 2), (3, 1)]
    assert cyclocoef.divisors(12) == [1, 2, 3, 4, 6, 12]
    assert cyclocoef.mobius(30) == -1
    assert cyclocoef.reachable_vectors(6, 1) == [[-2], [-1], [0], [1], [2]]
    subset, coeff = cyclocoef.mobius_witness(1, 6)
    assert subset == [2, 3] and coeff == 2


def test_constant_and_sums():
    g = cyclocoef.constant(1, prime_limit=100_000)
    assert abs(g["value"] - 6 / math.pi**2) <= g["tail_bound"]
    assert cyclocoef.two_pow_nu_sum(1, 1000) == 4987
    assert cyclocoef.h_sum(1, 1000) == 2494
    rows = cyclocoef.partial_sums("h", 1, [10, 100], prime_limit=1000)
    assert [row["sum"] for row in rows] == [12, 180]
    assert all(row["ratio"] > 0 for row in rows)


def test_errors():
    with pytest.raises(cyclocoef.CapExceeded):
        cyclocoef.h(1, 720720, method="brute")
    with pytest.raises(ValueError):
        cyclocoef.h(1, 6, method="nope")
    with pytest.raises(ValueError):
        cyclocoef.constant(1, prime_limit=2)

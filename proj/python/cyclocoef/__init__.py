"""Exact maximal coefficients of divisors of x^n - 1 and their average order."""

from ._core import (
    CapExceeded,
    coefficient_upper_bound,
    constant,
    cyclotomic,
    divisors,
    factorize,
    h,
    h_sum,
    mobius,
    mobius_witness,
    partial_sums,
    reachable_vectors,
    two_pow_nu_sum,
)

__all__ = [
    "CapExceeded",
    "coefficient_upper_bound",
    "constant",
    "cyclotomic",
    "divisors",
    "factorize",
    "h",
    "h_sum",
    "mobius",
    "mobius_witness",
    "partial_sums",
    "reachable_vectors",
    "two_pow_nu_sum",
]

"""Exact divisor sums, perfect-number structure and reciprocal-sum bounds."""

from ._core import (
    PerfectError,
    basel_partial,
    certify_bound,
    decompose,
    divisors,
    euclid_perfect,
    factor,
    geometric_partial,
    is_perfect,
    is_prime,
    lucas_lehmer,
    perfect_up_to,
    reciprocal_sum,
    sigma,
    sigma_naive,
    validate_certificate,
)

__all__ = [
    "PerfectError",
    "basel_partial",
    "certify_bound",
    "decompose",
    "divisors",
    "euclid_perfect",
    "factor",
    "geometric_partial",
    "is_perfect",
    "is_prime",
    "lucas_lehmer",
    "perfect_up_to",
    "reciprocal_sum",
    "sigma",
    "sigma_naive",
    "validate_certificate",
]

import json
from fractions import Fraction

import pytest

import perfect


def test_sigma_and_perfection():
    assert perfect.sigma(496) == 992
    assert perfect.sigma_naive(12) == 28
    assert perfect.divisors(28) == [1, 2, 4, 7, 14, 28]
    assert perfect.is_perfect(8128)
    assert not perfect.is_perfect(12)
    assert perfect.sigma(2**70) == 2**71 - 1


def test_errors_carry_codes():
    with pytest.raises(perfect.PerfectError) as info:
        perfect.sigma(0)
    assert info.value.code == "sigma_undefined_at_zero"
    with pytest.raises(ValueError):
        perfect.sigma(-5)
    with pytest.raises(perfect.PerfectError) as info:
        perfect.decompose(225)
    assert info.value.code == "no_odd_exponent"


def test_primes_and_factors():
    assert perfect.is_prime(2**89 - 1)
    assert not perfect.is_prime(2047)
    assert [k for k in range(2, 32) if perfect.lucas_lehmer(k)] == [2, 3, 5, 7, 13, 17, 19, 31]
    assert perfect.factor(675) == [(3, 3), (5, 2)]


def test_scan_and_structure():
    assert perfect.perfect_up_to(10000) == [6, 28, 496, 8128]
    assert perfect.perfect_up_to(10000, "cross-checked") == [6, 28, 496, 8128]
    assert perfect.euclid_perfect(13)["n"] == 33550336
    assert perfect.decompose(8128) == {"form": "even", "n": 8128, "k": 7, "mersenne": 127}
    assert perfect.decompose(33075) == {"form": "odd", "n": 33075, "p": 3, "i": 3, "m": 35}


def test_series_and_certificate():
    assert perfect.geometric_partial(10) == Fraction(2047, 1024)
    assert perfect.basel_partial(3) == Fraction(49, 36)
    s = perfect.reciprocal_sum(10000)
    assert s["total"] == Fraction(1, 6) + Fraction(1, 28) + Fraction(1, 496) + Fraction(1, 8128)
    assert s["odd_part"] == 0
    cert = perfect.certify_bound(10000)
    assert cert["conclusion"]["relation"] == "lt"
    assert Fraction(cert["conclusion"]["total"]) < 4
    assert perfect.validate_certificate(json.dumps(cert)) is None
    cert["conclusion"]["total"] = "9/1"
    assert perfect.validate_certificate(json.dumps(cert)) is not None

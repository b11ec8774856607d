from fractions import Fraction
import math

from hypothesis import given, strategies as st
import numpy as np
import pytest

from dtpart.errors import DomainError
from dtpart.special_functions import (floor_and_frac, frac_part, int_log, li2,
                                      log1pexp)

# 50-digit mpmath values, frozen
LI2_REFERENCE = {
    -1.0: -0.82246703342411321823620758332301259460947495060340,
    0.7: 0.88937762428603873860100627480736179353714742710847,
    -3.0: -1.9393754207667089530772717191778914412225901778086,
    -0.75: -0.64276126883997887910529040104709162332468732003329,
    0.3: 0.32612951007547606953003569417499604570558867999792,
    -30.0: -7.3959462861306814278203951393454422269599146929513,
}


def direct_series(x, terms=200):
    return math.fsum(x ** k / k ** 2 for k in range(1, terms + 1))


def test_li2_at_one():
    assert li2(1) == pytest.approx(math.pi ** 2 / 6, rel=1e-15)


def test_li2_at_zero():
    assert li2(0) == 0.0


def test_li2_minus_one_against_alternating_series():
    # pair consecutive terms; tail after 10^6 pairs is below 1e-13
    m = np.arange(1, 2 * 10 ** 6 + 1, dtype=float)
    oracle = math.fsum(((-1.0) ** m) / m ** 2)
    assert li2(-1) == pytest.approx(oracle, abs=1e-12)
    assert li2(-1) == pytest.approx(-math.pi ** 2 / 12, rel=1e-14)


@pytest.mark.parametrize("x, expected", sorted(LI2_REFERENCE.items()))
def test_li2_against_high_precision(x, expected):
    assert li2(x) == pytest.approx(expected, rel=1e-13)


def test_li2_domain_error():
    with pytest.raises(DomainError):
        li2(1.0000001)


@pytest.mark.parametrize("x", np.linspace(-0.5, 0.5, 41))
def test_series_consistency(x):
    assert li2(x) == pytest.approx(direct_series(x), rel=1e-13, abs=1e-300)


@pytest.mark.parametrize("x", np.concatenate([np.linspace(0.05, 1.0, 20),
                                              np.linspace(1.0, 20.0, 39)]))
def test_reflection_identity(x):
    rhs = (-math.pi ** 2 / 12 + li2(1 - x) - 0.5 * li2(1 - x * x)
           - math.log(x) * math.log1p(x))
    assert abs(li2(-x) - rhs) <= 1e-11


def test_monotone_on_minus_one_to_one():
    xs = np.linspace(-1, 1, 2001)
    vals = np.array([li2(x) for x in xs])
    assert np.all(np.diff(vals) > 0)


@given(st.floats(min_value=-1e6, max_value=1.0, allow_nan=False))
def test_li2_derivative_sign(x):
    # Li2 is increasing on (-inf, 1]
    h = 1e-6 * max(1.0, abs(x))
    if x - h < -1e6:
        return
    assert li2(x) >= li2(x - h)


def test_frac_part_examples():
    assert frac_part(3.0) == 0.0
    assert frac_part(2 * math.sqrt(25)) == 0.0
    assert frac_part(math.sqrt(2) * math.sqrt(50)) == 0.0
    assert frac_part(2.25) == 0.25
    assert frac_part(Fraction(7, 2)) == 0.5


def test_floor_and_frac_exact_rational():
    assert floor_and_frac(Fraction(2), 25) == (10, 0.0)
    assert floor_and_frac("3/2", 16) == (6, 0.0)
    L, fr = floor_and_frac(Fraction(3), 1000)
    assert L == 94
    assert fr == pytest.approx(0.86832980505137995997, abs=1e-15)


def test_floor_and_frac_float_snaps():
    assert floor_and_frac(math.sqrt(2), 50) == (10, 0.0)
    assert floor_and_frac(math.sqrt(2), 5) == (3, pytest.approx(math.sqrt(10) - 3))


@given(st.integers(min_value=1, max_value=50), st.integers(min_value=1, max_value=50),
       st.integers(min_value=0, max_value=10 ** 6))
def test_floor_and_frac_matches_integer_comparison(p, q, n):
    L, fr = floor_and_frac(Fraction(p, q), n)
    assert q * q * L * L <= p * p * n < q * q * (L + 1) ** 2
    assert 0.0 <= fr < 1.0


@given(st.integers(min_value=1, max_value=10 ** 400))
def test_int_log(m):
    assert int_log(m) == pytest.approx(math.log(m), rel=1e-14)


def test_log1pexp_large():
    assert log1pexp(800.0) == 800.0
    assert log1pexp(-800.0) == 0.0
    assert log1pexp(0.0) == pytest.approx(math.log(2.0))

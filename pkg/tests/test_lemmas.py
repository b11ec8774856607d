from fractions import Fraction
import math

from hypothesis import given, settings, strategies as st
import numpy as np
import pytest

from dtpart.errors import BudgetExceeded, DomainError
from dtpart.lemmas import (LEMMA1_CONSTANT, LEMMA2_CONSTANT, SMALL_S_CONSTANT,
                           canonical_lemma1_grid, dist_to_int, f_x, lemma1_max_ratio,
                           lemma1_samples, lemma1_small_s_max, lemma2_candidates,
                           lemma2_min, lemma2_min_dense, weyl_sum, weyl_sum_grid,
                           _eval_pieces)


def naive_f(x, s):
    return (np.log((1 + x * np.exp(1j * s)) / (1 + x)) - 1j * s * x / (1 + x)
            + 0.5 * s * s * x / (1 + x) ** 2)


def test_remainder_vanishes_at_zero():
    assert f_x(0.3, 0.0) == 0


@settings(max_examples=80)
@given(st.floats(min_value=0.01, max_value=0.99), st.floats(min_value=0.05, max_value=3.1))
def test_remainder_conjugate_symmetry_and_naive(x, s):
    a, b = f_x(x, s), f_x(x, -s)
    assert a == pytest.approx(b.conjugate(), abs=1e-14)
    assert a == pytest.approx(naive_f(x, s), abs=1e-12)


def test_third_order_behaviour():
    # f_x(s) ~ -(i s^3/6) x(1-x)/(1+x)^3
    x, s = 0.5, 0.01
    lead = abs(s ** 3 / 6 * x * (1 - x) / (1 + x) ** 3)
    assert abs(f_x(x, s)) == pytest.approx(lead, rel=0.05)


def test_remainder_grid_certificates():
    xs, ss = canonical_lemma1_grid()
    assert lemma1_max_ratio(xs, ss) <= LEMMA1_CONSTANT
    assert lemma1_small_s_max(xs, ss) <= SMALL_S_CONSTANT
    assert lemma1_small_s_max(xs, ss) <= lemma1_max_ratio(xs, ss)


def test_remainder_rejects_bad_input():
    with pytest.raises(DomainError):
        lemma1_max_ratio([0.5], [0.0, 0.1])
    with pytest.raises(DomainError):
        f_x(1.0, 0.1)


def test_remainder_samples_match_grid():
    xs, ss = [0.2, 0.7], [-1.0, 0.5, 2.0]
    best = max(r.bound_ratio for r in lemma1_samples(xs, ss))
    assert best == pytest.approx(lemma1_max_ratio(xs, ss), rel=1e-12)


def test_weyl_sum_cases():
    assert weyl_sum(5, Fraction(1, 2)) == Fraction(3, 4)
    assert weyl_sum(10, Fraction(0)) == 0
    assert weyl_sum(4, Fraction(1, 3)) == Fraction(3, 9)
    assert weyl_sum(7, 0.5) == pytest.approx(1.0)
    assert dist_to_int(Fraction(7, 3)) == Fraction(1, 3)


@settings(max_examples=60)
@given(st.integers(min_value=1, max_value=60), st.integers(min_value=0, max_value=200),
       st.integers(min_value=1, max_value=200))
def test_weyl_sum_float_matches_exact(n, a, b):
    alpha = Fraction(a, b)
    assert weyl_sum(n, float(alpha)) == pytest.approx(float(weyl_sum(n, alpha)), abs=1e-12)


def test_weyl_grid_matches_scalar():
    alphas = np.linspace(0.01, 0.5, 37)
    g = weyl_sum_grid(23, alphas)
    assert np.allclose(g, [weyl_sum(23, a) for a in alphas], atol=1e-13)


@pytest.mark.parametrize("n", [1, 7, 30, 60])
def test_piecewise_quadratic_matches_direct(n):
    lo = 0.5 / n
    _, pieces = lemma2_candidates(n, lo)
    alphas = np.linspace(lo, 0.5, 4001)
    assert np.allclose(_eval_pieces(alphas, pieces), weyl_sum_grid(n, alphas), atol=1e-9)


@pytest.mark.parametrize("n", [10, 50, 100, 500])
def test_weyl_lower_bound_certificate(n):
    alpha, value = lemma2_min(n, 0.5)
    assert value / n >= LEMMA2_CONSTANT
    assert 0.5 / n <= alpha <= 0.5
    assert value == pytest.approx(weyl_sum(n, alpha), abs=1e-12)


@pytest.mark.parametrize("n", [3, 10, 30, 60])
def test_weyl_min_matches_dense_oracle(n):
    _, cand = lemma2_min(n, 0.5)
    _, dense = lemma2_min_dense(n, 0.5)
    assert abs(cand - dense) <= 1e-9


def test_raw_grid_gap_bounded():
    n, points = 60, 10 ** 6
    lo = 0.5 / n
    _, cand = lemma2_min(n, 0.5)
    _, raw = lemma2_min_dense(n, 0.5, refine=False)
    h = (0.5 - lo) / (points - 1)
    Q = n * (n + 1) * (2 * n + 1) / 6
    assert -1e-12 <= raw - cand <= Q * h * h / 4


def test_weyl_min_monotone_in_epsilon():
    vals = [lemma2_min(40, e)[1] for e in (0.05, 0.1, 0.25, 0.5)]
    assert all(a <= b + 1e-12 for a, b in zip(vals, vals[1:]))


def test_weyl_min_limits():
    with pytest.raises(BudgetExceeded):
        lemma2_min(5000, 0.5)
    with pytest.raises(DomainError):
        lemma2_min(10, 0.0)

from fractions import Fraction

import mpmath
from hypothesis import given, strategies as st

from gkn.surd import QuadraticSurd

mpmath.mp.prec = 256


def _mp(x: QuadraticSurd):
    return (x.A + x.sign * mpmath.sqrt(x.N)) / x.Q


def test_perfect_square_folds():
    assert QuadraticSurd(192, 1, 36864, 8) == 48
    assert QuadraticSurd(6, -1, 36, 8) == 0
    assert str(QuadraticSurd(6, 1, 36, 8)) == "3/2"


def test_irrational_text():
    assert str(QuadraticSurd(1, 1, 2, 3)) == "(1+sqrt(2))/3"


@given(st.integers(-10**6, 10**6), st.sampled_from([-1, 1]), st.integers(0, 10**8),
       st.integers(1, 100), st.fractions(max_denominator=50).filter(lambda q: abs(q) < 10**7))
def test_compare_matches_high_precision(A, sign, N, Q, q):
    x = QuadraticSurd(A, sign, N, Q)
    diff = _mp(x) - mpmath.mpf(q.numerator) / q.denominator
    if abs(diff) > mpmath.mpf(10) ** -40:
        assert x.compare(q) == (1 if diff > 0 else -1)
    elif x.is_rational:
        assert x.compare(q) == (x.rational_part > q) - (x.rational_part < q)


@given(st.integers(-10**6, 10**6), st.sampled_from([-1, 1]), st.integers(0, 10**8),
       st.integers(1, 100))
def test_floor_and_neighbours(A, sign, N, Q):
    x = QuadraticSurd(A, sign, N, Q)
    f = x.floor()
    assert x.compare(f) >= 0 and x.compare(f + 1) < 0
    below = x.largest_int_below()
    assert x.compare(below) > 0 and x.compare(below + 1) <= 0
    above = x.smallest_int_above()
    assert x.compare(above) < 0 and x.compare(above - 1) >= 0


def test_equality_is_structural_for_irrationals():
    assert QuadraticSurd(2, 1, 8, 4) == QuadraticSurd(1, 1, 2, 2)
    assert QuadraticSurd(1, 1, 2, 1) != QuadraticSurd(1, -1, 2, 1)
    assert QuadraticSurd(1, 1, 2, 1) != Fraction(5, 2)

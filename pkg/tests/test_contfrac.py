from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from prismlattice.contfrac import (
    DegenerateExpansion, as_rational, hj_rewrite_interior, hj_rewrite_tail, montesinos_coeffs,
    neg_eval, neg_expand, pos_eval, pos_expand,
)


def slow_neg_eval(cf):
    # independent evaluation through convergents: p_k = a_k p_{k-1} - p_{k-2}
    p0, p1 = 1, cf[0]
    q0, q1 = 0, 1
    for a in cf[1:]:
        p0, p1 = p1, a * p1 - p0
        q0, q1 = q1, a * q1 - q0
    return Fraction(p1, q1)


@pytest.mark.parametrize("x, cf", [("19/8", (3, 2, 3, 2)), (5, (5,)), ("11/2", (6, 2)), ("9/7", (2, 2, 2, 3))])
def test_neg_expand_examples(x, cf):
    assert neg_expand(x) == cf


def test_neg_eval_examples():
    assert neg_eval([3, 2, 3, 2]) == Fraction(19, 8)
    assert neg_eval([7]) == 7
    assert neg_eval([2, -3]) == Fraction(7, 3) == neg_eval([3, 2, 2])


@pytest.mark.parametrize("x, cf", [("7/2", (3, 2)), ("1/4", (0, 4)), ("5/3", (1, 1, 2))])
def test_pos_expand_examples(x, cf):
    assert pos_expand(x) == cf
    assert pos_eval(cf) == Fraction(x)


def test_rewrite_rules():
    assert hj_rewrite_tail((3, 2, 2), 2) == (2, -3)
    assert hj_rewrite_interior((4, 2, 3), 0, 1) == (3, -2, 2)
    assert neg_eval((3, -2, 2)) == neg_eval((4, 2, 3)) == Fraction(17, 5)
    # empty run
    assert hj_rewrite_interior((5, 4), 0, 0) == (4, -1, 3)
    assert neg_eval((4, -1, 3)) == neg_eval((5, 4))
    with pytest.raises(ValueError):
        hj_rewrite_interior((4, 3, 3), 0, 1)
    with pytest.raises(ValueError):
        hj_rewrite_tail((3, 2, 4), 2)


def test_montesinos_examples():
    assert montesinos_coeffs([3, 2]) == (6, 2)
    assert montesinos_coeffs([1, 1, 2]) == (4, 3)
    assert montesinos_coeffs([4]) == (6,)
    assert neg_eval(montesinos_coeffs([1, 1, 2])) == Fraction(11, 3)


def test_bad_inputs():
    with pytest.raises(ValueError):
        neg_expand(1)
    with pytest.raises(ValueError):
        pos_expand(0)
    with pytest.raises(TypeError):
        as_rational(1.5)
    with pytest.raises(DegenerateExpansion):
        neg_eval([2, 1, 1])
    with pytest.raises(ValueError):
        montesinos_coeffs([2, 0])


# the minus expansion of 1 + 1/N has about N terms, so keep denominators moderate
rationals_gt1 = st.tuples(st.integers(1, 10**6), st.integers(1, 3000)).map(
    lambda t: Fraction(t[0] + t[1], t[1]))


@settings(deadline=None)
@given(rationals_gt1)
def test_neg_round_trip(x):
    cf = neg_expand(x)
    assert all(a >= 2 for a in cf)
    assert neg_eval(cf) == x == slow_neg_eval(cf)


@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_pos_round_trip(a, b):
    x = Fraction(a, b)
    cf = pos_expand(x)
    assert cf[0] >= 0 and all(c > 0 for c in cf[1:])
    assert pos_eval(cf) == x


@given(st.integers(3, 400), st.data())
def test_montesinos_identity(q, data):
    p = data.draw(st.integers(2, q - 1))
    if gcd(p, q) != 1:
        return
    coeffs = montesinos_coeffs(pos_expand(Fraction(p, q - p)))
    assert neg_eval(coeffs) == Fraction(2 * q - p, q - p)
    assert coeffs == neg_expand(Fraction(2 * q - p, q - p))

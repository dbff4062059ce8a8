from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from qhlag.quadalg import (
    QuadraticAlgebraPresentation as QA, change_lift, delta, isomorphic, negate_generator,
    normal_form,
)


@pytest.mark.parametrize("a,d", [(QA(0, 1), 4), (QA(1, 1), 5), (QA(0, 0), 0)])
def test_delta(a, d):
    assert delta(a) == d


@pytest.mark.parametrize("a,r,b", [
    (QA(1, 1), 1, QA(3, -1)), (QA(5, 7), 0, QA(5, 7)), (QA(0, 0), 2, QA(4, -4)),
])
def test_change_lift(a, r, b):
    assert change_lift(a, r) == b and delta(b) == delta(a)


def test_negate_and_normal_form():
    assert negate_generator(QA(3, -1)) == QA(-3, -1)
    assert normal_form(QA(3, -1)) == QA(1, 1)
    assert normal_form(QA(2, 0)) == QA(0, 1)
    assert normal_form(QA(0, 0)) == QA(0, 0)
    assert isomorphic(QA(0, 1), QA(2, 0)) and not isomorphic(QA(0, 1), QA(1, 1))


def test_exhaustive_grid():
    rng = range(-50, 51)
    for s, t in product(rng, rng):
        a = QA(s, t)
        d = delta(a)
        assert d % 4 in (0, 1)
        nf = normal_form(a)
        assert normal_form(negate_generator(a)) == nf and normal_form(nf) == nf
        for r in range(-10, 11):
            b = change_lift(a, r)
            assert delta(b) == d
            assert normal_form(b) == nf


small = st.builds(QA, st.integers(-20, 20), st.integers(-20, 20))


@given(small, small)
def test_isomorphic_iff_same_normal_form(a, b):
    assert isomorphic(a, b) == (normal_form(a) == normal_form(b))


def test_rational_variant():
    a = QA(Fraction(1, 2), Fraction(3, 4))
    assert not a.is_integral
    assert delta(change_lift(a, Fraction(1, 3))) == delta(a) == Fraction(13, 4)

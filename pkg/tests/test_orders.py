import itertools

import pytest
from hypothesis import given
import hypothesis.strategies as st

from tropstrat.orders import DEGREVLEX, GT, LT, EQ, LEX, NegativeExponent, key_mul, weighted

nonneg_monos = st.tuples(*(st.integers(0, 4) for _ in range(3)))


def test_lex_example():
    # lex with x > y: compare x vs y
    assert LEX.compare((1, 0), (0, 1)) == GT


def test_degrevlex_example():
    # oracle: by the textbook rule, x^2 > x*y when x > y
    assert DEGREVLEX.compare((1, 1), (2, 0)) == LT
    assert DEGREVLEX.compare((2, 0), (1, 1)) == GT


def test_weighted_example():
    order = weighted((1, 0), tiebreak=LEX)
    assert order.compare((1, 0), (0, 2)) == GT  # weights 1 vs 0


def test_negative_exponent_rejected():
    with pytest.raises(NegativeExponent):
        DEGREVLEX.compare((1, -1), (0, 0))


@given(nonneg_monos, nonneg_monos)
def test_antisymmetric(m1, m2):
    for order in (LEX, DEGREVLEX, weighted((2, 1, 0))):
        assert order.compare(m1, m2) == -order.compare(m2, m1)


@given(nonneg_monos, nonneg_monos, nonneg_monos)
def test_transitive(m1, m2, m3):
    for order in (LEX, DEGREVLEX, weighted((2, 1, 0))):
        ms = sorted([m1, m2, m3], key=order.key)
        assert order.compare(ms[0], ms[2]) in (LT, EQ)


@given(nonneg_monos, nonneg_monos, nonneg_monos)
def test_multiplicative(m1, m2, m):
    shifted = (tuple(a + b for a, b in zip(m1, m)), tuple(a + b for a, b in zip(m2, m)))
    for order in (LEX, DEGREVLEX, weighted((2, 1, 0))):
        assert order.compare(m1, m2) == order.compare(*shifted)


@given(nonneg_monos, nonneg_monos)
def test_keys_are_additive(m1, m2):
    prod = tuple(a + b for a, b in zip(m1, m2))
    for order in (LEX, DEGREVLEX, weighted((3, -1, 2), tiebreak=LEX)):
        assert order.key(prod) == key_mul(order.key(m1), order.key(m2))


def test_total_on_small_grid():
    monos = list(itertools.product(range(3), repeat=3))
    for order in (LEX, DEGREVLEX, weighted((1, 1, 0))):
        keys = [order.key(m) for m in monos]
        assert len(set(keys)) == len(monos)  # total: no two distinct monomials tie

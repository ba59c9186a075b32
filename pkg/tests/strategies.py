"""Hypothesis strategies for exact scalars and sparse polynomials."""

from fractions import Fraction

import hypothesis.strategies as st

from tropstrat.laurent import LaurentPoly
from tropstrat.scalars import TScalar

small_ints = st.integers(min_value=-4, max_value=4)


_DENOMINATORS = ([1], [2], [0, 1], [0, 0, 1], [1, 1], [1, -1], [2, 1])


@st.composite
def tscalars(draw, max_degree=2, nonzero=False):
    num = draw(st.lists(small_ints, min_size=1, max_size=max_degree + 1))
    if nonzero and not any(num):
        num[draw(st.integers(0, len(num) - 1))] = draw(st.sampled_from([1, -1, 2, 3]))
    den = draw(st.sampled_from(_DENOMINATORS))
    return TScalar([Fraction(c) for c in num], [Fraction(c) for c in den])


@st.composite
def monomials(draw, nvars, lo=-2, hi=2):
    return tuple(draw(st.integers(lo, hi)) for _ in range(nvars))


@st.composite
def laurent_polys(draw, vars=("x", "y"), max_terms=4, nonzero=False, lo=-2, hi=2):
    nvars = len(vars)
    n_terms = draw(st.integers(1 if nonzero else 0, max_terms))
    terms = {}
    for _ in range(n_terms):
        mono = draw(monomials(nvars, lo, hi))
        coeff = draw(tscalars(nonzero=True))
        terms[mono] = coeff
    poly = LaurentPoly(vars, terms)
    if nonzero and not poly:
        mono = draw(monomials(nvars, lo, hi))
        poly = LaurentPoly(vars, {mono: TScalar([Fraction(1)])})
    return poly

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from tropstrat.initial import TorusIdeal, trop_member
from tropstrat.linalg import kernel
from tropstrat.matroids import (Matroid, NonlinearInput, RankDeficient, bergman_member,
                                from_matrix, loops, restrict_to_min, verify_linear_initial)
from tropstrat.parsing import parse_poly

U23 = Matroid.uniform(2, 3)


def test_from_matrix_uniform():
    M = from_matrix([[1, 0, 1], [0, 1, 1]])
    assert M == U23


def test_from_matrix_with_zero_column():
    M = from_matrix([[1, 0, 0], [0, 1, 0]])
    assert M.bases == frozenset({frozenset({1, 2})})
    assert loops(M) == [3]


def test_from_matrix_identity():
    M = from_matrix([[1, 0], [0, 1]])
    assert M.bases == frozenset({frozenset({1, 2})})


def test_from_matrix_rank_deficient():
    with pytest.raises(RankDeficient):
        from_matrix([[1, 1, 0], [2, 2, 0]])


def test_restrict_to_min_examples():
    assert restrict_to_min(U23, (0, 0, 0)) == U23
    assert restrict_to_min(U23, (1, 0, 0)).bases == frozenset({frozenset({2, 3})})
    assert restrict_to_min(U23, (-1, 0, 0)).bases == frozenset(
        {frozenset({1, 2}), frozenset({1, 3})})


def test_loops_examples():
    assert loops(U23) == []
    assert loops(Matroid(3, [{2, 3}])) == [1]
    assert loops(Matroid(3, [{1, 2}])) == [3]


def test_bergman_member_examples():
    assert bergman_member(U23, (0, 0, 0))
    assert not bergman_member(U23, (1, 0, 0))
    assert bergman_member(U23, (-1, 0, 0))


def test_basis_exchange_validation():
    with pytest.raises(ValueError):
        Matroid(4, [{1, 2}, {3, 4}])  # exchange fails
    Matroid(4, [{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}])  # fine


def test_restrict_preserves_exchange_exhaustively():
    rng = random.Random(3)
    for _ in range(25):
        r = rng.randint(1, 3)
        n = rng.randint(r, 6)
        rows = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(r)]
        try:
            M = from_matrix(rows)
        except RankDeficient:
            continue
        w = tuple(Fraction(rng.randint(-2, 2)) for _ in range(n))
        restricted = restrict_to_min(M, w)  # constructor revalidates exchange
        assert restricted.bases <= M.bases


@given(st.integers(0, 200), st.fractions(min_value=-3, max_value=3),
       st.fractions(min_value=Fraction(1, 4), max_value=4))
def test_translation_and_scaling_invariance(seed, c, lam):
    rng = random.Random(seed)
    n = rng.randint(2, 8)
    r = rng.randint(1, min(4, n))
    rows = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(r)]
    try:
        M = from_matrix(rows)
    except RankDeficient:
        return
    w = tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n))
    shifted = tuple(x + c for x in w)
    scaled = tuple(lam * x for x in w)
    assert bergman_member(M, w) == bergman_member(M, shifted)
    assert bergman_member(M, w) == bergman_member(M, scaled)


def test_restrict_idempotent_link():
    for w in itertools.product((-1, 0, 1), repeat=3):
        Mw = restrict_to_min(U23, w)
        assert restrict_to_min(Mw, (0, 0, 0)) == Mw


def test_bergman_at_zero_iff_loopless():
    assert bergman_member(U23, (0, 0, 0)) is True
    withloop = Matroid(3, [{1, 2}])
    assert bergman_member(withloop, (0, 0, 0)) is False


def test_verify_linear_initial_examples():
    XY = ("x", "y")
    L = TorusIdeal(XY, [parse_poly("x + y + t", XY)])
    assert verify_linear_initial(L, (1, 1))
    assert verify_linear_initial(L, (1, 2))


def test_verify_linear_initial_rejects_nonlinear(paper_ideal):
    with pytest.raises(NonlinearInput):
        verify_linear_initial(paper_ideal, (0, 0, 0))


def test_breakpoint_initial_is_nonreduced(paper_ideal):
    # contrast case: the curve's breakpointgets a non-reduced initial scheme
    from tropstrat.initial import initial_ideal
    from tropstrat.groebner import member, PolyIdeal

    J = initial_ideal(paper_ideal, (0, 0, 0)).as_ideal()
    sq = parse_poly("(x-1)^2", ("x", "y", "z")).to_residue()
    lin = parse_poly("x-1", ("x", "y", "z")).to_residue()
    assert member(sq, J) and not member(lin, J)


def _grid_agreement(rowspace_matrix, vars, grid_values=(-1, 0, 1)):
    """trop(kernel ideal) vs Bergman fan of the column matroid.

    The min-convention basis selection pairs with the antipodal weight on
    the tropical side (both sides verified independently in the suite).
    """
    M = from_matrix(rowspace_matrix)
    forms = kernel(rowspace_matrix, len(vars))
    gens = []
    for v in forms:
        terms = {tuple(1 if i == k else 0 for i in range(len(vars))): c
                 for k, c in enumerate(v) if c}
        from tropstrat.laurent import LaurentPoly
        from tropstrat.scalars import TScalar
        gens.append(LaurentPoly(vars, {m: TScalar([c]) for m, c in terms.items()}))
    L = TorusIdeal(vars, gens)
    for w in itertools.product(grid_values, repeat=len(vars)):
        anti = tuple(-x for x in w)
        if trop_member(L, w) != bergman_member(M, anti):
            return False, w
    return True, None


def test_bergman_tropical_consistency_u23():
    ok, bad = _grid_agreement([[1, 0, -1], [0, 1, -1]], ("x", "y", "z"))
    assert ok, f"mismatch at {bad}"


def test_bergman_tropical_consistency_rank2_on_4():
    ok, bad = _grid_agreement([[1, 0, 1, 1], [0, 1, 1, 2]], ("x1", "x2", "x3", "x4"))
    assert ok, f"mismatch at {bad}"


def test_min_convention_needs_the_antipode():
    # with the same orientation on both sides the identity genuinely fails
    vars = ("x", "y", "z")
    L = TorusIdeal(vars, [parse_poly("x + y + z", vars)])
    M = from_matrix([[1, 0, -1], [0, 1, -1]])
    assert trop_member(L, (1, 0, 0)) is True
    assert bergman_member(M, (1, 0, 0)) is False
    assert bergman_member(M, (-1, 0, 0)) is True

"""Matroids on small ground sets: bases, weight minimization, Bergman fans.

Bases are stored explicitly as frozensets of 1-based elements; the
basis-exchange axiom is validated exhaustively on construction for ground
sets of size up to 12.  The weight-selection convention is min throughout:
M_w keeps the bases of minimal total weight, and a weight lies in the
Bergman fan when M_w has no loops.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .laurent import as_weight
from .linalg import rank as matrix_rank


class RankDeficient(ValueError):
    """The matrix has smaller rank than its row count."""


class NonlinearInput(ValueError):
    """The operation needs affine-linear generators."""


_VALIDATE_LIMIT = 12


class Matroid:
    __slots__ = ("n", "bases", "rank")

    def __init__(self, n, bases, validate=True):
        self.n = int(n)
        self.bases = frozenset(frozenset(b) for b in bases)
        if not self.bases:
            raise ValueError("a matroid needs at least one basis")
        sizes = {len(b) for b in self.bases}
        if len(sizes) != 1:
            raise ValueError("bases of unequal size")
        self.rank = sizes.pop()
        for b in self.bases:
            if not all(1 <= e <= self.n for e in b):
                raise ValueError(f"basis {sorted(b)} outside ground set [1..{self.n}]")
        if validate and self.n <= _VALIDATE_LIMIT:
            self._check_exchange()

    def _check_exchange(self):
        for b1, b2 in itertools.permutations(self.bases, 2):
            for e in b1 - b2:
                stripped = b1 - {e}
                if not any(stripped | {f} in self.bases for f in b2 - b1):
                    raise ValueError(
                        f"basis exchange fails for {sorted(b1)}, {sorted(b2)} at {e}")

    @classmethod
    def uniform(cls, r, n):
        return cls(n, (frozenset(c) for c in itertools.combinations(range(1, n + 1), r)),
                   validate=False)

    @classmethod
    def parse(cls, text):
        from .parsing import parse_matroid_text

        return parse_matroid_text(text)

    def loops(self):
        """Elements contained in no basis."""
        covered = frozenset().union(*self.bases)
        return sorted(set(range(1, self.n + 1)) - covered)

    def basis_weight(self, basis, w):
        return sum(w[e - 1] for e in basis)

    def restrict_to_min(self, w):
        """The matroid of bases with minimal total weight."""
        w = as_weight(w, self.n)
        weights = {b: self.basis_weight(b, w) for b in self.bases}
        best = min(weights.values())
        return Matroid(self.n, (b for b, wt in weights.items() if wt == best))

    def bergman_member(self, w):
        """w is in the Bergman fan iff the min-weight matroid has no loops."""
        return not self.restrict_to_min(w).loops()

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and self.bases == other.bases

    def __hash__(self):
        return hash((self.n, self.bases))

    def __str__(self):
        items = sorted(tuple(sorted(b)) for b in self.bases)
        shown = ",".join("".join(str(e) for e in b) if self.n <= 9
                         else ".".join(str(e) for e in b) for b in items)
        return f"N={self.n}; bases={shown}"

    def __repr__(self):
        return f"Matroid({self})"


def from_matrix(rows):
    """Column matroid of a full-row-rank rational matrix."""
    rows = [tuple(Fraction(x) for x in row) for row in rows]
    r = len(rows)
    n = len(rows[0]) if rows else 0
    if matrix_rank(rows, n) < r:
        raise RankDeficient(f"matrix rank < {r}")
    bases = []
    for cols in itertools.combinations(range(n), r):
        sub = [[row[c] for c in cols] for row in rows]
        if matrix_rank(sub, r) == r:
            bases.append(frozenset(c + 1 for c in cols))
    return Matroid(n, bases, validate=False)


def restrict_to_min(M, w):
    return M.restrict_to_min(w)


def loops(M):
    return M.loops()


def bergman_member(M, w):
    return M.bergman_member(w)


def verify_linear_initial(L, w):
    """Initial ideal of an affine-linear ideal is linear (degree <= 1 basis).

    The generators must be affine-linear Laurent polynomials; the check
    computes the initial ideal at w and inspects its reduced basis.
    """
    from .initial import initial_ideal

    for g in L.gens:
        for mono in g.terms:
            if any(e < 0 for e in mono) or sum(mono) > 1:
                raise NonlinearInput(f"generator {g} is not affine-linear")
    J = initial_ideal(L, w)
    return all(g.total_degree() <= 1 for g in J.generators)

"""Term orders on monomials with nonnegative exponents.

Monomials are exponent tuples.  Each order provides a sort key so that the
leading monomial of a polynomial is the max of the keys; `compare` is the
three-way comparison derived from the key.  Weighted orders compare the
weight of the exponent vector first and delegate ties to their tiebreak, so
composite orders (elimination blocks, weight-refined orders) are built by
nesting `weighted`.

Keys are flat tuples of numbers and are *additive*: key(m1 * m2) is the
componentwise sum of the keys, which lets division loops shift precomputed
keys instead of recomputing them.
"""

from __future__ import annotations

from fractions import Fraction

LT, EQ, GT = -1, 0, 1


class NegativeExponent(ValueError):
    """Term orders are only defined on monomials with nonnegative exponents."""


def _exact(w):
    w = Fraction(w)
    return int(w) if w.denominator == 1 else w


class TermOrder:
    __slots__ = ("kind", "weights", "tiebreak")

    def __init__(self, kind, weights=None, tiebreak=None):
        self.kind = kind
        self.weights = tuple(weights) if weights is not None else None
        self.tiebreak = tiebreak

    def key(self, mono):
        if self.kind == "lex":
            return tuple(mono)
        if self.kind == "degrevlex":
            return (sum(mono),) + tuple(-e for e in reversed(mono))
        # weighted
        w = sum(map(lambda wi, ei: wi * ei, self.weights, mono))
        return (w,) + self.tiebreak.key(mono)

    def compare(self, m1, m2):
        """Three-way comparison: GT when m1 > m2."""
        if min(m1, default=0) < 0 or min(m2, default=0) < 0:
            raise NegativeExponent(f"compare({m1}, {m2})")
        k1, k2 = self.key(m1), self.key(m2)
        if k1 < k2:
            return LT
        if k1 > k2:
            return GT
        return EQ

    def __repr__(self):
        if self.kind == "weighted":
            return f"weighted({self.weights}, {self.tiebreak!r})"
        return self.kind

    def __eq__(self, other):
        return (isinstance(other, TermOrder)
                and self.kind == other.kind
                and self.weights == other.weights
                and self.tiebreak == other.tiebreak)

    def __hash__(self):
        return hash((self.kind, self.weights, self.tiebreak))


LEX = TermOrder("lex")
DEGREVLEX = TermOrder("degrevlex")


def key_mul(k1, k2):
    """Key of a monomial product from the factors' keys."""
    return tuple(a + b for a, b in zip(k1, k2))


def weighted(weights, tiebreak=DEGREVLEX):
    return TermOrder("weighted", [_exact(w) for w in weights], tiebreak)


def elimination(nvars, positions, tiebreak=DEGREVLEX):
    """Order eliminating the variables at `positions`.

    Any monomial involving an eliminated variable beats any monomial in the
    remaining variables, so the intersection with the subring is read off a
    Groebner basis.
    """
    w = [0] * nvars
    for p in positions:
        w[p] = 1
    return weighted(w, tiebreak)


def weight_refined(weights, nvars):
    """Degree-compatible order selecting minimal-weight terms first.

    Compares total degree, then weight ascending (smaller weight = larger
    monomial), then degrevlex.  On a homogeneous polynomial the leading term
    is a term of minimal weight, which is what the initial-form machinery
    needs; degree-first keeps it a genuine (well-founded) term order even
    when the weights are negative.
    """
    ones = [1] * nvars
    neg = [-_exact(w) for w in weights]
    return weighted(ones, weighted(neg, DEGREVLEX))

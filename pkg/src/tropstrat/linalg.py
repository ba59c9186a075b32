"""Exact rational linear algebra: rank, kernels, solving.

Kernels of integer matrices go through fraction-free (Bareiss-style)
forward elimination; general rational input is scaled row-wise to integers
first, which never changes row spaces or kernels.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _integerize(row):
    fracs = [Fraction(x) for x in row]
    denom = lcm(*(f.denominator for f in fracs)) if fracs else 1
    ints = [int(f * denom) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def _bareiss_echelon(rows, ncols):
    """Fraction-free row echelon form; returns (echelon rows, pivot columns)."""
    m = [list(r) for r in rows if any(r)]
    pivots = []
    r = 0
    prev = 1
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        for i in range(r + 1, len(m)):
            for j in range(c + 1, ncols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def integer_kernel(rows, ncols):
    """Basis of the rational kernel of an integer (or rational) matrix.

    Returns primitive integer vectors, one per free column, canonically
    ordered by free-column index.
    """
    rows = [_integerize(r) for r in rows]
    echelon, pivots = _bareiss_echelon(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        # back-substitute through the echelon rows
        for i in reversed(range(len(echelon))):
            c = pivots[i]
            s = sum(Fraction(echelon[i][j]) * v[j] for j in range(c + 1, ncols))
            v[c] = -s / echelon[i][c]
        basis.append(tuple(_integerize_vec(v)))
    return basis


def _integerize_vec(v):
    denom = lcm(*(x.denominator for x in v)) if v else 1
    ints = [int(x * denom) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    # sign normalization: first nonzero entry positive
    lead = next((x for x in ints if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return [Fraction(x) for x in ints]


def rank(rows, ncols=None):
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    _, pivots = _bareiss_echelon([_integerize(r) for r in rows], ncols)
    return len(pivots)


def kernel(rows, ncols):
    """Rational kernel basis (alias of integer_kernel after scaling)."""
    return integer_kernel(rows, ncols)

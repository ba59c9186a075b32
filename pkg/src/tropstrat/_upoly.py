"""Dense univariate polynomial helpers over an exact field.

Polynomials are lists/tuples of coefficients, index = degree, with no
trailing zeros (the zero polynomial is the empty tuple).  Coefficients may
be `fractions.Fraction` or `TScalar`; both support mixed arithmetic with
Python ints, which the helpers rely on.
"""

from __future__ import annotations


def trim(coeffs):
    cs = list(coeffs)
    while cs and not cs[-1]:
        cs.pop()
    return cs


def add(a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out.append(x + y)
    return trim(out)


def neg(a):
    return [-c for c in a]


def sub(a, b):
    return add(a, neg(b))


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return trim(out)


def scale(a, c):
    if not c:
        return []
    return trim([x * c for x in a])


def divmod_poly(a, b):
    """Quotient and remainder of a by b; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv_lead = b[-1] ** -1
    while len(r) >= len(b):
        c = r[-1] * inv_lead
        d = len(r) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            r[d + i] = r[d + i] - c * y
        r = trim(r)
        if not r:
            break
    return trim(q), r


def _renormalize(a):
    """Rescale by a unit to tame coefficient growth during gcd.

    Fraction coefficients are divided by their rational content; over other
    coefficient fields every nonzero scalar is a unit, so monic suffices.
    """
    from fractions import Fraction
    from math import gcd as igcd, lcm

    if not a:
        return a
    if isinstance(a[-1], Fraction):
        num_gcd = 0
        den_lcm = 1
        for c in a:
            num_gcd = igcd(num_gcd, abs(c.numerator))
            den_lcm = lcm(den_lcm, c.denominator)
        factor = Fraction(den_lcm, num_gcd)
        return [c * factor for c in a]
    return scale(a, a[-1] ** -1)


def _is_monomial(a):
    return bool(a) and not any(a[:-1])


def gcd(a, b):
    """Monic gcd by the Euclidean algorithm with content normalization."""
    a, b = trim(a), trim(b)
    if not a or not b:
        base = a or b
        return scale(base, base[-1] ** -1) if base else []
    if _is_monomial(a) or _is_monomial(b):
        k = min(order(a), order(b))
        return [0] * k + [a[-1] ** 0]  # t^k, monic in the coefficient field
    a, b = _renormalize(a), _renormalize(b)
    while b:
        _, rem = divmod_poly(a, b)
        a, b = b, _renormalize(rem)
    if a:
        a = scale(a, a[-1] ** -1)
    return a


def order(a):
    """Index of the lowest nonzero coefficient; None for the zero polynomial."""
    for i, c in enumerate(a):
        if c:
            return i
    return None


def shift_down(a, k):
    """Divide by the k-th power of the variable (requires divisibility)."""
    assert all(not c for c in a[:k])
    return list(a[k:])


def eval_at(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def pow_poly(a, n):
    result = [1]
    base = list(a)
    while n:
        if n & 1:
            result = mul(result, base)
        base = mul(base, base)
        n >>= 1
    return result

"""Exact scalars in Q(t) with the t-adic valuation.

The ground field is the rational function field Q(t).  The valuation is the
order of vanishing at t = 0 (value group Z, valuation ring Q[t] localized at
t, residue field Q), and gamma -> t^gamma is the fixed multiplicative
splitting of the valuation.  A `TScalar` is a reduced fraction num/den of
polynomials in Q[t] with monic denominator, which makes equality, hashing
and residue evaluation decidable.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import _upoly as up

INF = math.inf


class NegativeValuation(ArithmeticError):
    """Residue requested for a scalar of negative valuation."""


def _coerce_poly(value):
    """A Python number becomes a constant polynomial in t."""
    if isinstance(value, (int, Fraction)):
        return [Fraction(value)] if value else []
    raise TypeError(f"cannot coerce {value!r} into Q(t)")


_ONE_POLY = (Fraction(1),)


class TScalar:
    """An element of Q(t), stored as a reduced num/den pair in Q[t]."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=_ONE_POLY):
        num = up.trim(list(num))
        den = up.trim(list(den))
        if not den:
            raise ZeroDivisionError("zero denominator in Q(t)")
        if not num:
            self.num = ()
            self.den = _ONE_POLY
            return
        if len(den) == 1:  # constant denominator: just rescale
            if den[0] != 1:
                num = up.scale(num, den[0] ** -1)
            self.num = tuple(num)
            self.den = _ONE_POLY
            return
        g = up.gcd(num, den)
        if len(g) > 1:
            num, _ = up.divmod_poly(num, g)
            den, _ = up.divmod_poly(den, g)
        lead = den[-1]
        if lead != 1:
            inv = lead ** -1
            num = up.scale(num, inv)
            den = up.scale(den, inv)
        self.num = tuple(num)
        self.den = tuple(den)

    @classmethod
    def _reduced(cls, num, den):
        """Wrap an already-coprime num/den pair (den nonzero)."""
        obj = object.__new__(cls)
        if not num:
            obj.num, obj.den = (), _ONE_POLY
            return obj
        lead = den[-1]
        if lead != 1:
            inv = lead ** -1
            num = up.scale(num, inv)
            den = up.scale(den, inv)
        obj.num = tuple(num)
        obj.den = tuple(den)
        return obj

    # -- constructors ------------------------------------------------

    @classmethod
    def from_rational(cls, q):
        return cls(_coerce_poly(Fraction(q)))

    @classmethod
    def t_power(cls, gamma):
        """The splitting gamma -> t^gamma."""
        gamma = int(gamma)
        if gamma >= 0:
            return cls([0] * gamma + [1])
        return cls([1], [0] * (-gamma) + [1])

    @classmethod
    def parse(cls, text):
        from .parsing import parse_scalar

        return parse_scalar(text)

    # -- valuation structure ----------------------------------------

    def val(self):
        """t-adic valuation; +inf for zero."""
        if not self.num:
            return INF
        return up.order(self.num) - up.order(self.den)

    def residue(self):
        """Image in the residue field Q; requires val >= 0."""
        v = self.val()
        if v is INF or v > 0:
            return Fraction(0)
        if v < 0:
            raise NegativeValuation(f"val = {v} < 0 for {self}")
        # val == 0 and gcd(num, den) == 1 force nonzero constant terms.
        return self.num[0] / self.den[0]

    def leading_coeff(self):
        """Residue of t^(-val) * self: the leading t-coefficient."""
        if not self.num:
            raise ZeroDivisionError("leading coefficient of zero")
        on, od = up.order(self.num), up.order(self.den)
        return self.num[on] / self.den[od]

    # -- ring operations --------------------------------------------

    def _as_tscalar(self, other):
        if isinstance(other, TScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return TScalar(_coerce_poly(Fraction(other)))
        return None

    def __add__(self, other):
        o = self._as_tscalar(other)
        if o is None:
            return NotImplemented
        d1, d2 = list(self.den), list(o.den)
        if d1 == d2:  # common in accumulation loops
            return TScalar(up.add(list(self.num), list(o.num)), d1)
        if len(d1) > 1 and len(d2) > 1:
            # nested denominators (powers of one factor) dominate in series
            # recursions; a divisibility check is much cheaper than gcd
            small, big = (d1, d2) if len(d1) <= len(d2) else (d2, d1)
            q, r = up.divmod_poly(big, small)
            g = small if not r else up.gcd(d1, d2)
        else:
            g = []
        if len(g) <= 1:
            # coprime denominators: the sum is automatically reduced
            num = up.add(up.mul(list(self.num), d2), up.mul(list(o.num), d1))
            return TScalar._reduced(num, up.mul(d1, d2))
        d2r, _ = up.divmod_poly(d2, g)
        num = up.add(up.mul(list(self.num), d2r),
                     up.mul(list(o.num), up.divmod_poly(d1, g)[0]))
        return TScalar(num, up.mul(d1, d2r))

    __radd__ = __add__

    def __neg__(self):
        return TScalar(up.neg(list(self.num)), list(self.den))

    def __sub__(self, other):
        o = self._as_tscalar(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._as_tscalar(other)
        if o is None:
            return NotImplemented
        n1, d1 = list(self.num), list(self.den)
        n2, d2 = list(o.num), list(o.den)
        # cross-reduce so the product is born reduced (no large gcd later)
        if len(d2) > 1 and n1:
            g = up.gcd(n1, d2)
            if len(g) > 1:
                n1, _ = up.divmod_poly(n1, g)
                d2, _ = up.divmod_poly(d2, g)
        if len(d1) > 1 and n2:
            g = up.gcd(n2, d1)
            if len(g) > 1:
                n2, _ = up.divmod_poly(n2, g)
                d1, _ = up.divmod_poly(d1, g)
        return TScalar._reduced(up.mul(n1, n2), up.mul(d1, d2))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._as_tscalar(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero in Q(t)")
        n1, d1 = list(self.num), list(self.den)
        n2, d2 = list(o.num), list(o.den)
        if n1 and len(n2) > 1:
            g = up.gcd(n1, n2)
            if len(g) > 1:
                n1, _ = up.divmod_poly(n1, g)
                n2, _ = up.divmod_poly(n2, g)
        if len(d1) > 1 and len(d2) > 1:
            g = up.gcd(d1, d2)
            if len(g) > 1:
                d1, _ = up.divmod_poly(d1, g)
                d2, _ = up.divmod_poly(d2, g)
        return TScalar._reduced(up.mul(n1, d2), up.mul(d1, n2))

    def __rtruediv__(self, other):
        o = self._as_tscalar(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        n = int(n)
        if n == 0:
            return ONE
        if n < 0:
            if not self.num:
                raise ZeroDivisionError("inverse of zero in Q(t)")
            return TScalar(up.pow_poly(list(self.den), -n),
                           up.pow_poly(list(self.num), -n))
        return TScalar(up.pow_poly(list(self.num), n),
                       up.pow_poly(list(self.den), n))

    # -- comparisons and hashing ------------------------------------

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._as_tscalar(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.den == (Fraction(1),):
            if not self.num:
                return hash(Fraction(0))
            if len(self.num) == 1:
                return hash(self.num[0])
        return hash((self.num, self.den))

    # -- printing ----------------------------------------------------

    def __str__(self):
        num = _format_tpoly(self.num)
        if self.den == (Fraction(1),):
            return num
        den = _format_tpoly(self.den)
        if len(self.num) > 1 or (self.num and self.num[0] < 0):
            num = f"({num})"
        if len([c for c in self.den if c]) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"TScalar({self})"


def _format_coeff(c, mono):
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return f"-{mono}"
    return f"{c}*{mono}"


def _format_tpoly(coeffs):
    if not coeffs:
        return "0"
    parts = []
    for deg, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if deg == 0 else ("t" if deg == 1 else f"t^{deg}")
        parts.append(_format_coeff(c, mono))
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


ZERO = TScalar([])
ONE = TScalar([1])
T = TScalar([0, 1])


def split(gamma):
    """Splitting of the valuation: gamma -> t^gamma."""
    return TScalar.t_power(gamma)


def val(a):
    """t-adic valuation of a TScalar (or int/Fraction); +inf for 0."""
    if isinstance(a, (int, Fraction)):
        return 0 if a else INF
    return a.val()


def residue(a):
    if isinstance(a, (int, Fraction)):
        return Fraction(a)
    return a.residue()

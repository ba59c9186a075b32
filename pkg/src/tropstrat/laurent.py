"""Sparse multivariate Laurent polynomials.

Two coefficient rings are used throughout: `LaurentPoly` has TScalar
coefficients (elements of Q(t)) and may carry negative exponents, while
`ResiduePoly` has Fraction coefficients over the residue field Q.  Terms are
stored as a dict mapping exponent tuples to nonzero coefficients; printing
and hashing sort the terms by a fixed total order so that equal polynomials
have identical canonical forms.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .orders import DEGREVLEX
from .scalars import TScalar, val

INF = math.inf


class ZeroPolynomial(ValueError):
    """The initial form of the zero polynomial is undefined."""


# ---------------------------------------------------------------------------
# monomial helpers (exponent tuples)

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_divides(a, b):
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def dot(w, mono):
    return sum(Fraction(wi) * ei for wi, ei in zip(w, mono))


def as_weight(entries, nvars):
    w = tuple(Fraction(e) for e in entries)
    if len(w) != nvars:
        raise ValueError(f"weight vector has length {len(w)}, expected {nvars}")
    return w


def _sort_key(mono):
    return DEGREVLEX.key(mono)


def _format_mono(mono, names):
    parts = []
    for name, e in zip(names, mono):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _format_terms(items, names, coeff_str):
    if not items:
        return "0"
    parts = []
    for mono, c in items:
        m = _format_mono(mono, names)
        cs = coeff_str(c)
        if not m:
            parts.append(cs)
        elif cs == "1":
            parts.append(m)
        elif cs == "-1":
            parts.append(f"-{m}")
        else:
            parts.append(f"{cs}*{m}")
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


class _BasePoly:
    """Shared mechanics for sparse polynomials over an exact coefficient ring."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean = {}
        for mono, c in terms.items():
            mono = tuple(mono)
            if len(mono) != n:
                raise ValueError(f"monomial {mono} has wrong arity for {self.vars}")
            if c:
                clean[mono] = clean.get(mono, self._zero_coeff()) + c
                if not clean[mono]:
                    del clean[mono]
        self.terms = clean

    @classmethod
    def zero(cls, vars):
        return cls(vars, {})

    @classmethod
    def constant(cls, vars, c):
        return cls(vars, {(0,) * len(tuple(vars)): cls._coerce(c)})

    @classmethod
    def variable(cls, vars, name):
        vars = tuple(vars)
        mono = tuple(1 if v == name else 0 for v in vars)
        if sum(mono) != 1:
            raise ValueError(f"{name!r} is not among {vars}")
        return cls(vars, {mono: cls._coerce(1)})

    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def _lift(self, other):
        if isinstance(other, type(self)):
            return other
        try:
            return type(self).constant(self.vars, other)
        except TypeError:
            return None

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.vars == o.vars and self.terms == o.terms

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items(), key=lambda kv: kv[0]))))

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        self._check(o)
        res = dict(self.terms)
        for mono, c in o.terms.items():
            acc = res.get(mono, self._zero_coeff()) + c
            if acc:
                res[mono] = acc
            else:
                res.pop(mono, None)
        return type(self)(self.vars, res)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        self._check(o)
        res = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = mono_mul(m1, m2)
                acc = res.get(m, self._zero_coeff()) + c1 * c2
                if acc:
                    res[m] = acc
                else:
                    res.pop(m, None)
        return type(self)(self.vars, res)

    __rmul__ = __mul__

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("negative power of a non-term polynomial")
            ((mono, c),) = self.terms.items()
            return type(self)(self.vars, {tuple(e * n for e in mono): c ** n})
        result = type(self).constant(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_term(self, mono, coeff):
        return type(self)(self.vars,
                          {mono_mul(m, tuple(mono)): c * coeff for m, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]), reverse=True)

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def min_exponents(self):
        n = len(self.vars)
        return tuple(min((m[i] for m in self.terms), default=0) for i in range(n))

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class LaurentPoly(_BasePoly):
    """Laurent polynomial over Q(t); exponents may be negative."""

    __slots__ = ()

    @staticmethod
    def _zero_coeff():
        return TScalar([])

    @staticmethod
    def _coerce(c):
        if isinstance(c, TScalar):
            return c
        return TScalar.from_rational(c)

    def trop_eval(self, w):
        """min over terms of val(coeff) + w . exponent; +inf for 0."""
        w = as_weight(w, len(self.vars))
        best = INF
        for mono, c in self.terms.items():
            v = val(c) + dot(w, mono)
            if v < best:
                best = v
        return best

    def initial_form(self, w):
        """Terms of minimal weighted valuation, with leading t-coefficients."""
        if not self.terms:
            raise ZeroPolynomial("initial form of 0")
        w = as_weight(w, len(self.vars))
        vals = {mono: val(c) + dot(w, mono) for mono, c in self.terms.items()}
        m = min(vals.values())
        out = {mono: c.leading_coeff()
               for mono, c in self.terms.items() if vals[mono] == m}
        return ResiduePoly(self.vars, out)

    def to_residue(self):
        """Reinterpret a t-free polynomial over the residue field Q."""
        out = {}
        for mono, c in self.terms.items():
            if c.val() not in (0, INF) or len(c.num) > 1 or len(c.den) > 1:
                raise ValueError(f"coefficient {c} involves t")
            out[mono] = c.residue()
        return ResiduePoly(self.vars, out)

    def __str__(self):
        def coeff_str(c):
            s = str(c)
            if ("+" in s[1:]) or ("-" in s[1:]) or "/" in s:
                return f"({s})"
            return s

        return _format_terms(self.sorted_terms(), self.vars, coeff_str)


class ResiduePoly(_BasePoly):
    """Polynomial over the residue field Q (Laurent exponents allowed)."""

    __slots__ = ()

    @staticmethod
    def _zero_coeff():
        return Fraction(0)

    @staticmethod
    def _coerce(c):
        return Fraction(c)

    def to_laurent(self):
        return LaurentPoly(self.vars,
                           {m: TScalar.from_rational(c) for m, c in self.terms.items()})

    def is_term(self):
        return len(self.terms) == 1

    def __str__(self):
        return _format_terms(self.sorted_terms(), self.vars, str)

"""Truncated formal power series in one variable over Q(t).

A series carries its coefficients up to (excluding) the truncation order;
binary operations truncate to the smaller operand order.  Inversion uses
the standard coefficient recursion; square roots use Newton iteration
g <- (g + s/g)/2, doubling the reliable order each step.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import TScalar


class NonUnitConstantTerm(ArithmeticError):
    """Series inversion needs an invertible constant coefficient."""


class BadConstantTerm(ArithmeticError):
    """Series square root is normalized to constant coefficient 1."""


class NonUnitSubstitution(ValueError):
    """Negative polynomial exponents need unit substituted series."""


def _coerce(c):
    if isinstance(c, TScalar):
        return c
    return TScalar.from_rational(Fraction(c))


class TruncatedSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        coeffs = [_coerce(c) for c in coeffs]
        if order is None:
            order = len(coeffs)
        if order < 1:
            raise ValueError("truncation order must be >= 1")
        coeffs = coeffs[:order] + [TScalar([])] * (order - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order

    @classmethod
    def constant(cls, c, order):
        return cls([_coerce(c)], order)

    @classmethod
    def variable(cls, order):
        """The series z."""
        return cls([0, 1], order)

    def truncate(self, order):
        if order > self.order:
            raise ValueError(f"cannot extend truncation {self.order} to {order}")
        return TruncatedSeries(self.coeffs[:order], order)

    def valuation(self):
        """Index of the first nonzero coefficient; None if none is stored."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def shift_down(self, k):
        """Divide by z^k (the first k coefficients must vanish)."""
        if any(self.coeffs[:k]):
            raise ValueError(f"series not divisible by z^{k}")
        return TruncatedSeries(self.coeffs[k:], self.order - k)

    def shift_up(self, k):
        return TruncatedSeries([TScalar([])] * k + list(self.coeffs), self.order + k)

    def _align(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, self.order)
        n = min(self.order, other.order)
        return self.coeffs[:n], other.coeffs[:n], n

    def __add__(self, other):
        a, b, n = self._align(other)
        return TruncatedSeries([x + y for x, y in zip(a, b)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        a, b, n = self._align(other)
        return TruncatedSeries([x - y for x, y in zip(a, b)], n)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, TScalar)):
            c = _coerce(other)
            return TruncatedSeries([x * c for x in self.coeffs], self.order)
        a, b, n = self._align(other)
        out = [TScalar([]) for _ in range(n)]
        for i, x in enumerate(a):
            if not x:
                continue
            for j in range(n - i):
                if b[j]:
                    out[i + j] = out[i + j] + x * b[j]
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def inverse(self):
        """Multiplicative inverse mod z^order."""
        c0 = self.coeffs[0]
        if not c0:
            raise NonUnitConstantTerm("constant coefficient is zero")
        inv0 = 1 / c0
        out = [inv0]
        for k in range(1, self.order):
            acc = TScalar([])
            for i in range(1, k + 1):
                if self.coeffs[i] and out[k - i]:
                    acc = acc + self.coeffs[i] * out[k - i]
            out.append(-inv0 * acc)
        return TruncatedSeries(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, TScalar)):
            return self * (1 / _coerce(other))
        return self * other.inverse()

    def sqrt(self):
        """Principal square root by Newton iteration; needs constant term 1."""
        if self.coeffs[0] != TScalar([Fraction(1)]):
            raise BadConstantTerm("square root needs constant coefficient 1")
        g = TruncatedSeries([1], 1)
        prec = 1
        while prec < self.order:
            prec = min(2 * prec, self.order)
            s = self.truncate(prec)
            g = TruncatedSeries(g.coeffs, prec)
            g = (g + s * g.inverse()) * Fraction(1, 2)
        return g

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = str(c)
            if ("+" in cs[1:]) or ("-" in cs[1:]) or "/" in cs:
                cs = f"({cs})"
            if i == 0:
                parts.append(cs)
            else:
                mono = "z" if i == 1 else f"z^{i}"
                parts.append(mono if cs == "1" else f"-{mono}" if cs == "-1" else f"{cs}*{mono}")
        body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        return f"{body} + O(z^{self.order})"

    def __repr__(self):
        return f"TruncatedSeries({self})"


def series_inv(s):
    return s.inverse()


def series_sqrt(s):
    return s.sqrt()


def eval_poly(f, substitutions):
    """Evaluate a Laurent polynomial with series substituted for variables.

    `substitutions` maps every variable of f to a TruncatedSeries; negative
    exponents require the substituted series to have a unit constant term.
    """
    missing = [v for v in f.vars if v not in substitutions]
    if missing:
        raise ValueError(f"no substitution for {missing}")
    order = min(s.order for s in substitutions.values()) if substitutions else None
    if order is None:
        raise ValueError("need at least one substitution")
    result = TruncatedSeries.constant(0, order)
    powers = {}

    def power_of(var, e):
        key = (var, e)
        if key not in powers:
            base = substitutions[var].truncate(order)
            if e < 0:
                if not base.coeffs[0]:
                    raise NonUnitSubstitution(
                        f"{var} has negative exponents but a non-unit series")
                base = base.inverse()
                e = -e
            acc = TruncatedSeries.constant(1, order)
            for _ in range(e):
                acc = acc * base
            powers[key] = acc
        return powers[key]

    for mono, coeff in f.terms.items():
        term = TruncatedSeries.constant(coeff, order)
        for var, e in zip(f.vars, mono):
            if e:
                term = term * power_of(var, e)
        result = result + term
    return result

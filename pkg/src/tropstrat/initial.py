"""Initial ideals of Laurent ideals over Q(t) at rational weights.

The computation lifts a torus ideal I in Q(t)[x1^.., xN^..] to a polynomial
ideal J in Q[t, x] (clearing t-denominators, shifting Laurent monomials,
and saturating by t*x1*..*xN), homogenizes a degree-compatible basis of J,
and runs Buchberger for an order refining "total degree, then minimal lifted
weight".  On homogeneous input the leading terms are the minimal-weight
terms, so keeping each basis element's minimal-weight part, substituting
t -> 1 and saturating by x1*..*xN yields the initial ideal inside the torus.
The lifted weight for a rational w is (c, c*w) with c clearing denominators;
term selection is invariant under that positive scaling.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction

from .groebner import PolyIdeal, ReducedGB, buchberger, homogeneity_space, saturate
from .laurent import LaurentPoly, ResiduePoly, as_weight, dot
from .orders import weight_refined
from .scalars import TScalar

INF = math.inf


class TorusIdeal:
    """An ideal of Q(t)[x1^.., xN^..] given by Laurent generators."""

    __slots__ = ("vars", "gens", "_lift", "_lift_homog")

    def __init__(self, vars, gens):
        self.vars = tuple(vars)
        self.gens = tuple(gens)
        if not self.gens:
            raise ValueError("torus ideal needs at least one generator")
        for g in self.gens:
            if not isinstance(g, LaurentPoly) or g.vars != self.vars:
                raise ValueError("generator in wrong ring")
            if not g:
                raise ValueError("zero generator")
        self._lift = None
        self._lift_homog = None

    @classmethod
    def parse(cls, text, vars):
        from .parsing import parse_ideal_text

        return cls(vars, parse_ideal_text(text, vars))

    def lifted(self):
        if self._lift is None:
            self._lift = lift(self)
        return self._lift

    def lifted_homogeneous(self):
        """Homogenization of a degrevlex basis of the lift (cached)."""
        if self._lift_homog is None:
            J = self.lifted()
            self._lift_homog = _homogenize_ideal(J)
        return self._lift_homog

    def member(self, f):
        """Membership of a Laurent polynomial in the ideal over Q(t)."""
        if f.vars != self.vars:
            raise ValueError("polynomial in wrong ring")
        if not f:
            return True
        lifted_f = _clear_to_poly(f, self.lifted().vars)
        return self.lifted().groebner().contains(lifted_f)

    def __repr__(self):
        return f"TorusIdeal<{'; '.join(str(g) for g in self.gens)}>"


def _clear_to_poly(g, tvars):
    """Clear t-denominators and Laurent exponents of one generator.

    Returns a ResiduePoly in Q[t, x..] that agrees with g up to a unit of
    the Laurent ring over Q(t).
    """
    from . import _upoly as up

    # lcm of the coefficient denominators, accumulated pairwise
    den = [Fraction(1)]
    for c in g.terms.values():
        gcd = up.gcd(den, list(c.den))
        quotient, _ = up.divmod_poly(list(c.den), gcd)
        den = up.mul(den, quotient)
    shift = tuple(-min(e, 0) for e in g.min_exponents())
    terms = {}
    for mono, c in g.terms.items():
        numer, rem = up.divmod_poly(up.mul(list(c.num), den), list(c.den))
        assert not rem
        xmono = tuple(e + s for e, s in zip(mono, shift))
        for j, coeff in enumerate(numer):
            if coeff:
                key = (j,) + xmono
                terms[key] = terms.get(key, Fraction(0)) + coeff
    return ResiduePoly(tvars, terms)


def lift(I):
    """Polynomial model of a torus ideal: Q[t, x] generators, fully saturated.

    Saturation by t*x1*..*xN makes the model intersect-like: a Laurent
    polynomial lies in I over Q(t) exactly when its cleared form lies here.
    """
    tvars = ("t",) + I.vars
    gens = [_clear_to_poly(g, tvars) for g in I.gens]
    product = ResiduePoly(tvars, {tuple([1] * len(tvars)): Fraction(1)})
    return saturate(PolyIdeal(tvars, gens), product)


def _homogenize_ideal(J):
    """Homogenize a degrevlex reduced basis with a fresh last variable."""
    from .groebner import _fresh_var

    h = _fresh_var(J.vars, "h")
    hvars = J.vars + (h,)
    out = []
    for g in J.groebner():
        d = g.total_degree()
        out.append(ResiduePoly(hvars,
                               {m + (d - sum(m),): c for m, c in g.terms.items()}))
    return PolyIdeal(hvars, out)


def _scaled_weight(w):
    """Integer lifted weight (c, c*w) with c > 0 clearing denominators."""
    w = [Fraction(x) for x in w]
    c = math.lcm(*(x.denominator for x in w)) if w else 1
    return (c,) + tuple(int(c * x) for x in w)


def adapted_gb(I, w):
    """Reduced basis of the homogenized lift, adapted to the weight (1, w).

    Each element is homogeneous, so its leading term has minimal lifted
    weight; the minimal-weight parts generate the weighted initial ideal.
    """
    w = as_weight(w, len(I.vars))
    H = I.lifted_homogeneous()
    W = _scaled_weight(w) + (0,)
    order = weight_refined(W, len(H.vars))
    return buchberger(list(H.gens), order)


def _min_weight_part(g, W, keep):
    """Minimal-W terms of g, restricted to the coordinates in `keep`."""
    vals = {m: sum(wi * ei for wi, ei in zip(W, m)) for m in g.terms}
    best = min(vals.values())
    out = {}
    for m, c in g.terms.items():
        if vals[m] == best:
            key = tuple(m[i] for i in keep)
            out[key] = out.get(key, Fraction(0)) + c
    return out


class InitialIdeal:
    """in_w of a torus ideal: reduced basis of the saturated residue ideal."""

    __slots__ = ("weight", "vars", "gb")

    def __init__(self, weight, vars, gb):
        self.weight = tuple(Fraction(x) for x in weight)
        self.vars = tuple(vars)
        self.gb = gb

    @property
    def generators(self):
        return self.gb.elements

    def as_ideal(self):
        return PolyIdeal(self.vars, self.gb.elements)

    def is_empty(self):
        """True when w lies outside the tropical variety (unit ideal)."""
        return self.gb.is_unit_ideal()

    def __eq__(self, other):
        if isinstance(other, InitialIdeal):
            return self.vars == other.vars and self.gb == other.gb
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, self.gb))

    def __str__(self):
        return str(self.gb)

    def __repr__(self):
        return f"InitialIdeal(w={self.weight}, <{self.gb}>)"


def initial_from_adapted(I, w, G):
    """Initial ideal from an adapted basis already computed at w."""
    w = as_weight(w, len(I.vars))
    hvars = G.vars
    W = _scaled_weight(w) + (0,)
    # t -> 1 and h -> 1: keep only the x-coordinates (positions 1..N)
    keep = [i for i, name in enumerate(hvars) if name in I.vars]
    parts = []
    for g in G:
        terms = _min_weight_part(g, W, keep)
        p = ResiduePoly(I.vars, terms)
        if p:
            parts.append(p)
    if not parts:  # cannot happen for nonzero generators; defensive
        return InitialIdeal(w, I.vars, PolyIdeal(I.vars, []).groebner())
    product = ResiduePoly(I.vars, {(1,) * len(I.vars): Fraction(1)})
    sat = saturate(PolyIdeal(I.vars, parts), product)
    return InitialIdeal(w, I.vars, sat.groebner())


def initial_ideal(I, w):
    """The initial ideal of I at a rational weight, inside the torus."""
    w = as_weight(w, len(I.vars))
    return initial_from_adapted(I, w, adapted_gb(I, w))


def trop_member(I, w):
    """Tropical membership: the initial ideal is proper (monomial-free)."""
    return not initial_ideal(I, w).is_empty()


class SupportVerdict(enum.Enum):
    EQUAL = "Equal"
    NOT_EQUAL = "NotEqual"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self):
        return self.value


def _contains_monomial(ideal):
    """True when the saturation by all variables is the unit ideal."""
    product = ResiduePoly(ideal.vars, {(1,) * len(ideal.vars): Fraction(1)})
    return saturate(ideal, product).groebner().is_unit_ideal()


def support_equal(J, J_red, m_max=16):
    """Do J and the candidate reduced ideal J_red cut out the same support?

    Checks (a) every reduced-basis element of J lies in J_red and (b) every
    generator of J_red has a power (up to m_max) in J.  (a) and (b) certify
    equal radicals.  A failed (a), a monomial-freeness asymmetry, or a
    homogeneity-dimension mismatch witness NotEqual; otherwise a failed (b)
    is only Inconclusive.
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    J_ideal = J.as_ideal() if isinstance(J, InitialIdeal) else J
    red_gb = J_red.groebner()
    for g in J_ideal.groebner():
        if not red_gb.contains(g):
            return SupportVerdict.NOT_EQUAL
    J_gb = J_ideal.groebner()
    all_powers_found = True
    for g in J_red.gens:
        power = ResiduePoly.constant(J_red.vars, 1)
        found = False
        for _ in range(m_max):
            power = power * g
            if J_gb.contains(power):
                found = True
                break
        if not found:
            all_powers_found = False
            break
    if all_powers_found:
        return SupportVerdict.EQUAL
    if _contains_monomial(J_ideal) != _contains_monomial(J_red):
        return SupportVerdict.NOT_EQUAL
    if homogeneity_space(J_ideal).dim != homogeneity_space(J_red).dim:
        return SupportVerdict.NOT_EQUAL
    return SupportVerdict.INCONCLUSIVE


def trivial_initial_ideal(gens, vars, delta):
    """Initial ideal for the trivial valuation on Q.

    Coefficients free of t have valuation zero, so the weighted initial of
    the extended ideal over Q(t) computes exactly the trivial-valuation
    initial ideal.
    """
    I = TorusIdeal(vars, [g.to_laurent() if isinstance(g, ResiduePoly) else g
                          for g in gens])
    return initial_ideal(I, delta)

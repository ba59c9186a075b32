"""Buchberger machinery over Q.

Works on `ResiduePoly` instances with nonnegative exponents.  The pair set
is pruned with the Gebauer-Moeller criteria and pairs are selected by the
normal strategy (smallest lcm in the term order).  Output bases are reduced:
monic, auto-reduced, and sorted by leading monomial, so a reduced basis is a
canonical fingerprint of its ideal.

A global step budget guards runaway computations: every single division
step counts, and exceeding the budget (TROPSTRAT_MAX_GB_STEPS, default 10^6)
raises StepLimitExceeded.
"""

from __future__ import annotations

import os
from fractions import Fraction

from .laurent import ResiduePoly, mono_div, mono_divides, mono_lcm, mono_mul
from .linalg import integer_kernel
from .orders import DEGREVLEX, TermOrder, elimination, key_mul

DEFAULT_STEP_LIMIT = 10 ** 6


class StepLimitExceeded(RuntimeError):
    """The reduction-step budget was exhausted."""


def step_limit():
    raw = os.environ.get("TROPSTRAT_MAX_GB_STEPS", "")
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_STEP_LIMIT


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit=None):
        self.left = step_limit() if limit is None else limit

    def spend(self, n=1):
        self.left -= n
        if self.left < 0:
            raise StepLimitExceeded(
                "Groebner reduction-step budget exceeded "
                "(raise TROPSTRAT_MAX_GB_STEPS to continue)")


# ---------------------------------------------------------------------------
# internal representation: term lists sorted descending by order key

def _to_sorted(p, order):
    return sorted(((order.key(m), m, c) for m, c in p.terms.items()), reverse=True)


def _to_poly(terms, vars):
    return ResiduePoly(vars, {m: c for _, m, c in terms})


def _sub_scaled(f, g, coeff, shift, order):
    """f - coeff * x^shift * g for sorted term lists (merge).

    Keys are additive, so the shifted keys of g come from one key lookup.
    """
    kshift = order.key(shift)
    out = []
    i = j = 0
    while i < len(f) and j < len(g):
        km, m, c = f[i]
        kg = key_mul(g[j][0], kshift)
        if km > kg:
            out.append(f[i])
            i += 1
        elif km < kg:
            out.append((kg, mono_mul(g[j][1], shift), -coeff * g[j][2]))
            j += 1
        else:
            c2 = c - coeff * g[j][2]
            if c2:
                out.append((km, m, c2))
            i += 1
            j += 1
    out.extend(f[i:])
    for kg2, gm2, gc in g[j:]:
        out.append((key_mul(kg2, kshift), mono_mul(gm2, shift), -coeff * gc))
    return out


def _monic(f):
    lc = f[0][2]
    if lc == 1:
        return f
    inv = Fraction(1) / lc
    return [(k, m, c * inv) for k, m, c in f]


def _normal_form_sorted(f, basis, order, budget):
    """Full normal form of a sorted term list against sorted monic reducers."""
    result = []
    work = list(f)
    while work:
        _, m, c = work[0]
        for g in basis:
            if mono_divides(g[0][1], m):
                budget.spend()
                work = _sub_scaled(work, g, c, mono_div(m, g[0][1]), order)
                break
        else:
            result.append(work[0])
            work = work[1:]
    return result


def normal_form(f, basis, order=DEGREVLEX, budget=None):
    """Remainder of f on division by a list of polynomials.

    No term of the result is divisible by any leading term of the basis;
    f minus the result lies in the ideal the basis generates.
    """
    budget = budget or _Budget()
    reducers = [_monic(_to_sorted(g, order)) for g in basis if g]
    out = _normal_form_sorted(_to_sorted(f, order), reducers, order, budget)
    return _to_poly(out, f.vars)


def _spoly(f, g, order):
    lf, lg = f[0][1], g[0][1]
    lcm = mono_lcm(lf, lg)
    a = _sub_scaled([], f, Fraction(-1), mono_div(lcm, lf), order)
    return _sub_scaled(a, g, Fraction(1), mono_div(lcm, lg), order)


def _gm_update(G, pairs, new_index, lead):
    """Gebauer-Moeller pair update when basis element new_index is appended."""
    lcm = mono_lcm
    lmf = lead[new_index]
    pairs = {(i, j) for (i, j) in pairs
             if not mono_divides(lmf, lcm(lead[i], lead[j]))
             or lcm(lead[i], lmf) == lcm(lead[i], lead[j])
             or lcm(lead[j], lmf) == lcm(lead[i], lead[j])}
    by_lcm = {}
    for i in range(new_index):
        by_lcm.setdefault(lcm(lead[i], lmf), []).append(i)
    kept = []
    for L in sorted(by_lcm, key=sum):
        if all(not mono_divides(K, L) for K in kept if K != L):
            kept.append(L)
    for L in kept:
        # Buchberger's first criterion: coprime leading terms reduce to zero.
        if any(lcm(lead[i], lmf) == mono_mul(lead[i], lmf) for i in by_lcm[L]):
            continue
        pairs.add((min(by_lcm[L]), new_index))
    return pairs


def buchberger(gens, order=DEGREVLEX, budget=None):
    """The reduced Groebner basis of the ideal the generators span."""
    budget = budget or _Budget()
    vars = gens[0].vars if gens else ()
    G, lead, pairs = [], [], set()
    for g in sorted((g for g in gens if g), key=lambda p: order.key(_to_sorted(p, order)[0][1])):
        f = _monic(_to_sorted(g, order))
        f = _normal_form_sorted(f, G, order, budget)
        if not f:
            continue
        f = _monic(f)
        G.append(f)
        lead.append(f[0][1])
        pairs = _gm_update(G, pairs, len(G) - 1, lead)
    while pairs:
        i, j = min(pairs, key=lambda p: (order.key(mono_lcm(lead[p[0]], lead[p[1]])), p))
        pairs.discard((i, j))
        s = _spoly(G[i], G[j], order)
        r = _normal_form_sorted(s, G, order, budget)
        if r:
            r = _monic(r)
            G.append(r)
            lead.append(r[0][1])
            pairs = _gm_update(G, pairs, len(G) - 1, lead)
    # minimalize: drop elements whose lead is divisible by another lead
    minimal = []
    for idx in sorted(range(len(G)), key=lambda k: order.key(lead[k])):
        if all(not mono_divides(m[0][1], lead[idx]) for m in minimal):
            minimal.append(G[idx])
    # interreduce to the unique reduced basis
    reduced = []
    for k, f in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        r = _normal_form_sorted(f, others, order, budget)
        reduced.append(_monic(r))
    reduced.sort(key=lambda f: order.key(f[0][1]))
    return ReducedGB(tuple(_to_poly(f, vars) for f in reduced), order)


class ReducedGB:
    """Canonical reduced Groebner basis: monic, auto-reduced, sorted."""

    __slots__ = ("elements", "order")

    def __init__(self, elements, order):
        self.elements = tuple(elements)
        self.order = order

    @property
    def vars(self):
        return self.elements[0].vars if self.elements else ()

    def leading_monomials(self):
        return [max(g.terms, key=self.order.key) for g in self.elements]

    def normal_form(self, f, budget=None):
        return normal_form(f, list(self.elements), self.order, budget)

    def contains(self, f):
        return not self.normal_form(f)

    def is_unit_ideal(self):
        return len(self.elements) == 1 and self.elements[0] == ResiduePoly.constant(self.vars, 1)

    def is_zero_ideal(self):
        return not self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, ReducedGB):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __str__(self):
        return ", ".join(str(g) for g in self.elements) if self.elements else "0"

    def __repr__(self):
        return f"ReducedGB<{self}>"


class PolyIdeal:
    """An ideal in Q[x1..xn] given by generators, with cached canonical GB."""

    __slots__ = ("vars", "gens", "_gb")

    def __init__(self, vars, gens):
        self.vars = tuple(vars)
        self.gens = tuple(g for g in gens if g)
        for g in self.gens:
            if g.vars != self.vars:
                raise ValueError("generator in wrong ring")
            if any(e < 0 for m in g.terms for e in m):
                raise ValueError("PolyIdeal generators need nonnegative exponents")
        self._gb = None

    def groebner(self, order=None):
        if order is None or order == DEGREVLEX:
            if self._gb is None:
                self._gb = buchberger(list(self.gens), DEGREVLEX)
            return self._gb
        return buchberger(list(self.gens), order)

    def __repr__(self):
        return f"PolyIdeal<{', '.join(str(g) for g in self.gens)}>"


def member(f, ideal):
    """Ideal membership via normal form against the canonical reduced basis."""
    return ideal.groebner().contains(f)


def ideal_equal(a, b):
    """Equality of ideals: identical reduced bases for the canonical order."""
    if a.vars != b.vars:
        raise ValueError("ideals in different rings")
    return a.groebner() == b.groebner()


def _fresh_var(vars, stem):
    if stem not in vars:
        return stem
    k = 0
    while f"{stem}{k}" in vars:
        k += 1
    return f"{stem}{k}"


def saturate(ideal, g):
    """(I : g^infinity) via the extra-variable trick.

    Adjoins a fresh variable s with the relation s*g = 1 and eliminates it
    with a block order, which realizes inverting g.
    """
    if not g:
        raise ValueError("saturation by zero")
    vars = ideal.vars
    s = _fresh_var(vars, "s")
    ext = vars + (s,)

    def extend(p):
        return ResiduePoly(ext, {m + (0,): c for m, c in p.terms.items()})

    rel = extend(g).mul_term((0,) * len(vars) + (1,), Fraction(1)) - ResiduePoly.constant(ext, 1)
    order = elimination(len(ext), [len(vars)])
    gb = buchberger([extend(p) for p in ideal.gens] + [rel], order)
    kept = []
    for p in gb:
        if all(m[-1] == 0 for m in p.terms):
            kept.append(ResiduePoly(vars, {m[:-1]: c for m, c in p.terms.items()}))
    return PolyIdeal(vars, kept)


class HomogeneitySpace:
    """Basis of the weights delta under which an ideal is delta-homogeneous."""

    __slots__ = ("vars", "basis")

    def __init__(self, vars, basis):
        self.vars = tuple(vars)
        self.basis = tuple(tuple(Fraction(x) for x in v) for v in basis)

    @property
    def dim(self):
        return len(self.basis)

    def __str__(self):
        rows = ["(" + ", ".join(str(x) for x in v) + ")" for v in self.basis]
        return "{" + "; ".join(rows) + "}" if rows else "{0}"


def is_delta_homogeneous(p, delta):
    vals = {sum(Fraction(d) * e for d, e in zip(delta, m)) for m in p.terms}
    return len(vals) <= 1


def homogeneity_space(ideal):
    """Common homogeneity directions of the reduced Groebner basis.

    An ideal is delta-homogeneous exactly when its reduced basis is, so the
    space is the kernel of the matrix of exponent differences taken within
    each basis element.
    """
    gb = ideal.groebner() if isinstance(ideal, PolyIdeal) else ideal
    rows = []
    for g in gb:
        monos = list(g.terms)
        base = monos[0]
        for m in monos[1:]:
            rows.append(tuple(a - b for a, b in zip(m, base)))
    vars = gb.vars if hasattr(gb, "vars") else ideal.vars
    basis = integer_kernel(rows, len(vars))
    return HomogeneitySpace(vars, basis)

"""Groebner and topological stratum analysis along rational rays.

The Groebner dimension at a weight is the dimension of the homogeneity
space of the initial ideal (the maximal subtorus preserving it); the
topological dimension is the same quantity for a verified support ideal.
`stratify_ray` partitions a rational ray segment into maximal open
intervals of constant initial ideal plus breakpoint singletons, finding
candidate breakpoints as roots of weighted-valuation tie equations among
the terms of adapted Groebner bases, iterated to a fixed point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .groebner import homogeneity_space
from .initial import (InitialIdeal, SupportVerdict, adapted_gb, initial_from_adapted,
                      initial_ideal, support_equal, trop_member)
from .laurent import as_weight, dot
from .parsing import fmt_fraction

INF = math.inf


class OutsideTropicalVariety(ValueError):
    """The weight does not lie in the tropical variety."""


class SupportMismatch(ValueError):
    """The candidate support ideal provably differs from the actual support."""


class SupportUnverified(ValueError):
    """The support comparison was inconclusive at the given power bound."""


class DegenerateDirection(ValueError):
    """Ray direction must be nonzero."""


def groebner_dim(I, w):
    """Dimension of the Groebner stratum through w."""
    J = initial_ideal(I, w)
    if J.is_empty():
        raise OutsideTropicalVariety(f"w = {w} is outside the tropical variety")
    return homogeneity_space(J.as_ideal()).dim


def topological_dim(I, w, support_candidate, m_max=16):
    """Dimension of the topological stratum, via a verified support ideal."""
    J = initial_ideal(I, w)
    verdict = support_equal(J, support_candidate, m_max)
    if verdict is SupportVerdict.NOT_EQUAL:
        raise SupportMismatch(f"candidate is not the support of in_w at w = {w}")
    if verdict is SupportVerdict.INCONCLUSIVE:
        raise SupportUnverified(f"support not verified at power bound {m_max}")
    return homogeneity_space(support_candidate).dim


@dataclass(frozen=True)
class StratumReport:
    w: tuple
    initial: InitialIdeal
    groebner_dim: int
    topological_dim: int
    support_verdict: SupportVerdict
    strictly_finer: bool

    def to_dict(self):
        return {
            "w": [fmt_fraction(x) for x in self.w],
            "initial": [str(g) for g in self.initial.generators],
            "groebner_dim": self.groebner_dim,
            "topological_dim": self.topological_dim,
            "support_verdict": str(self.support_verdict),
            "strictly_finer": self.strictly_finer,
        }


def compare_stratifications(I, w, support_candidate, m_max=16):
    """Bundle Groebner vs topological data at one weight."""
    w = as_weight(w, len(I.vars))
    J = initial_ideal(I, w)
    if J.is_empty():
        raise OutsideTropicalVariety(f"w = {w} is outside the tropical variety")
    gdim = homogeneity_space(J.as_ideal()).dim
    tdim = topological_dim(I, w, support_candidate, m_max)
    verdict = support_equal(J, support_candidate, m_max)
    return StratumReport(w, J, gdim, tdim, verdict, strictly_finer=gdim < tdim)


@dataclass(frozen=True)
class RaySegment:
    lo: Fraction          # for a point segment lo == hi
    hi: Fraction
    kind: str             # "open" or "point"
    ideal: InitialIdeal
    groebner_dim: int | None

    def to_dict(self):
        if self.kind == "point":
            rng = [fmt_fraction(self.lo)]
        else:
            rng = [fmt_fraction(self.lo), fmt_fraction(self.hi)]
        return {
            "range": rng,
            "kind": self.kind,
            "generators": [str(g) for g in self.ideal.generators],
            "groebner_dim": self.groebner_dim,
        }


@dataclass(frozen=True)
class RayStratification:
    vars: tuple
    base: tuple
    direction: tuple
    lo: Fraction
    hi: Fraction
    cap: Fraction
    cap_applied: bool
    breakpoints: tuple
    segments: tuple

    def segment_at(self, s):
        for seg in self.segments:
            if seg.kind == "point" and seg.lo == s:
                return seg
            if seg.kind == "open" and seg.lo < s < seg.hi:
                return seg
        raise ValueError(f"parameter {s} outside the stratified range")

    def to_dict(self):
        return {
            "base": [fmt_fraction(x) for x in self.base],
            "direction": [fmt_fraction(x) for x in self.direction],
            "interval": [fmt_fraction(self.lo), fmt_fraction(self.hi)],
            "cap": fmt_fraction(self.cap),
            "cap_applied": self.cap_applied,
            "breakpoints": [fmt_fraction(b) for b in self.breakpoints],
            "segments": [seg.to_dict() for seg in self.segments],
        }


def _tie_roots(gb, base, direction, lo, hi, xpos):
    """Roots of pairwise weighted-valuation tie equations of basis elements.

    Terms of the lifted basis live in (t, x.., h); along w(s) = base + s*dir
    the weight of t^j x^u is j + w(s).u, so ties are linear equations in s.
    """
    roots = set()
    for g in gb:
        monos = list(g.terms)
        for a in range(len(monos)):
            ja, ua = monos[a][0], tuple(monos[a][i] for i in xpos)
            for b in range(a + 1, len(monos)):
                jb, ub = monos[b][0], tuple(monos[b][i] for i in xpos)
                du = tuple(x - y for x, y in zip(ua, ub))
                slope = dot(direction, du)
                const = (ja - jb) + dot(base, du)
                if slope == 0:
                    continue
                s = -const / slope
                if lo < s < hi:
                    roots.add(s)
    return roots


def _weight_at(base, direction, s):
    return tuple(b + s * d for b, d in zip(base, direction))


def stratify_ray(I, base, direction, lo, hi, cap=Fraction(10), max_rounds=20):
    """Stratify {base + s*dir : s in (lo, hi)} by the initial ideal.

    Infinite endpoints are capped at +-cap.  Candidate breakpoints come from
    tie equations of per-segment adapted bases, re-collected per refined
    segment until stable; every surviving open segment is classified at two
    interior points and spurious candidates are merged away.
    """
    base = as_weight(base, len(I.vars))
    direction = tuple(Fraction(d) for d in direction)
    if len(direction) != len(I.vars):
        raise ValueError("direction has wrong length")
    if not any(direction):
        raise DegenerateDirection("zero direction")
    cap = Fraction(cap)
    cap_applied = False
    if lo == -INF:
        lo, cap_applied = -cap, True
    if hi == INF:
        hi, cap_applied = cap, True
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError(f"empty interval ({lo}, {hi})")

    xpos = range(1, len(I.vars) + 1)  # x-coordinates inside (t, x.., h)
    candidates = set()
    samples = {}  # parameter -> adapted basis
    for _ in range(max_rounds):
        cuts = sorted(candidates)
        points = [lo] + cuts + [hi]
        new = set()
        for a, b in zip(points, points[1:]):
            for frac in (Fraction(1, 3), Fraction(2, 3)):
                s0 = a + (b - a) * frac
                if s0 in samples:
                    continue
                samples[s0] = adapted_gb(I, _weight_at(base, direction, s0))
                new |= _tie_roots(samples[s0], base, direction, lo, hi, xpos)
        if new <= candidates:
            break
        candidates |= new
    else:
        raise RuntimeError("breakpoint search did not stabilize")

    cuts = sorted(candidates)
    ideals_at = {s: initial_ideal(I, _weight_at(base, direction, s)) for s in cuts}
    points = [lo] + cuts + [hi]
    interval_ideals = []
    for a, b in zip(points, points[1:]):
        # classify at two interior samples; the fixpoint rounds guarantee
        # at least two sampled parameters inside every interval
        inside = sorted(s for s in samples if a < s < b)
        probes = [initial_from_adapted(I, _weight_at(base, direction, s), samples[s])
                  for s in (inside[0], inside[-1])]
        if probes[0].gb != probes[1].gb:
            raise RuntimeError(f"segment ({a}, {b}) not constant; missing breakpoint")
        interval_ideals.append(probes[0])

    # merge candidates that do not separate anything
    kept, merged = [], [interval_ideals[0]]
    for idx, s in enumerate(cuts):
        left, right = merged[-1], interval_ideals[idx + 1]
        point = ideals_at[s]
        if left.gb == right.gb == point.gb:
            continue
        kept.append(s)
        merged.append(right)

    def dim_of(J):
        return None if J.is_empty() else homogeneity_space(J.as_ideal()).dim

    segments = []
    points = [lo] + kept + [hi]
    for idx, (a, b) in enumerate(zip(points, points[1:])):
        if idx > 0:
            J = ideals_at[a]
            segments.append(RaySegment(a, a, "point", J, dim_of(J)))
        J = merged[idx]
        segments.append(RaySegment(a, b, "open", J, dim_of(J)))

    return RayStratification(I.vars, base, direction, lo, hi, cap, cap_applied,
                             tuple(kept), tuple(segments))

"""Command-line interface.

Subcommands map 1:1 onto library operations; all rational output is exact
("p/q", never decimals).  Exit codes: 0 success, 1 verification failure,
2 input error, 3 Groebner step budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .curve_example import VerificationFailure, branch_series, run_demo
from .groebner import PolyIdeal, StepLimitExceeded, homogeneity_space
from .initial import TorusIdeal, initial_ideal, trop_member
from .matroids import Matroid, from_matrix
from .parsing import (ParseError, fmt_fraction, parse_ideal_text, parse_matrix_text,
                      parse_matroid_text, parse_rational, parse_vars, parse_weight)
from .strata import (OutsideTropicalVariety, SupportMismatch, SupportUnverified,
                     compare_stratifications, stratify_ray)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_STEP_LIMIT = 3


@dataclass
class SessionConfig:
    vars: tuple = ()
    ideal_source: str | None = None
    weight: tuple = ()
    ray: dict = field(default_factory=dict)
    support_source: str | None = None
    m_max: int = 16
    truncation: int = 10
    json_output: bool = False


def _read_source(value):
    """A CLI value is either a path to a file or inline text."""
    try:
        with open(value, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError:
        return value


def _load_torus_ideal(args):
    vars = parse_vars(args.vars)
    text = _read_source(args.ideal)
    gens = parse_ideal_text(text, vars)
    if not gens:
        raise ParseError("no generators found")
    return vars, TorusIdeal(vars, gens)


def _load_poly_ideal(source, vars):
    text = _read_source(source)
    gens = [g.to_residue() for g in parse_ideal_text(text, vars)]
    return PolyIdeal(vars, gens)


def _load_matroid(args):
    if getattr(args, "matrix", None):
        return from_matrix(parse_matrix_text(_read_source(args.matrix)))
    if getattr(args, "bases", None):
        return parse_matroid_text(f"N={args.n}; bases={args.bases}")
    raise ParseError("need --bases with --n, or --matrix")


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def _cmd_initial(args):
    vars, I = _load_torus_ideal(args)
    w = parse_weight(args.w, len(vars))
    J = initial_ideal(I, w)
    gens = [str(g) for g in J.generators]
    payload = {"vars": list(vars), "w": [fmt_fraction(x) for x in w], "generators": gens}
    _emit(args, payload, [", ".join(gens)])
    return EXIT_OK


def _cmd_tropmember(args):
    vars, I = _load_torus_ideal(args)
    w = parse_weight(args.w, len(vars))
    inside = trop_member(I, w)
    payload = {"w": [fmt_fraction(x) for x in w], "member": inside}
    _emit(args, payload, ["inside" if inside else "outside"])
    return EXIT_OK


def _cmd_homspace(args):
    vars = parse_vars(args.vars)
    ideal = _load_poly_ideal(args.ideal, vars)
    H = homogeneity_space(ideal)
    payload = {
        "vars": list(vars),
        "dim": H.dim,
        "basis": [[fmt_fraction(x) for x in v] for v in H.basis],
    }
    _emit(args, payload, [f"dim {H.dim}", str(H)])
    return EXIT_OK


def _cmd_stratify_ray(args):
    vars, I = _load_torus_ideal(args)
    base = parse_weight(args.base, len(vars))
    direction = parse_weight(args.dir, len(vars))
    lo = -math.inf if args.lo.strip() in ("-inf", "inf-") else parse_rational(args.lo)
    hi = math.inf if args.hi.strip() in ("inf", "+inf") else parse_rational(args.hi)
    ray = stratify_ray(I, base, direction, lo, hi, cap=parse_rational(args.cap))
    payload = ray.to_dict()
    lines = [f"breakpoints: {', '.join(fmt_fraction(b) for b in ray.breakpoints) or '(none)'}"]
    for seg in ray.segments:
        where = f"s = {fmt_fraction(seg.lo)}" if seg.kind == "point" else \
            f"s in ({fmt_fraction(seg.lo)}, {fmt_fraction(seg.hi)})"
        dim = "-" if seg.groebner_dim is None else seg.groebner_dim
        lines.append(f"{where}: dim {dim}; <{seg.ideal}>")
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_compare(args):
    vars, I = _load_torus_ideal(args)
    w = parse_weight(args.w, len(vars))
    support = _load_poly_ideal(args.support, vars)
    report = compare_stratifications(I, w, support, m_max=args.m_max)
    payload = report.to_dict()
    verdict = "StrictlyFiner" if report.strictly_finer else "agree"
    _emit(args, payload, [
        f"groebner_dim {report.groebner_dim}, topological_dim {report.topological_dim}: {verdict}",
        f"support: {report.support_verdict}",
    ])
    return EXIT_OK


def _cmd_bergman(args):
    M = _load_matroid(args)
    w = parse_weight(args.w, M.n)
    restricted = M.restrict_to_min(w)
    loops = restricted.loops()
    payload = {"n": M.n, "w": [fmt_fraction(x) for x in w],
               "member": not loops, "loops": loops}
    if loops:
        text = f"outside (loop: {','.join(str(e) for e in loops)})"
    else:
        text = "inside"
    _emit(args, payload, [text])
    return EXIT_OK


def _cmd_matroid_min(args):
    M = _load_matroid(args)
    w = parse_weight(args.w, M.n)
    restricted = M.restrict_to_min(w)
    payload = {"n": M.n, "w": [fmt_fraction(x) for x in w], "matroid": str(restricted)}
    _emit(args, payload, [str(restricted)])
    return EXIT_OK


def _cmd_paper_demo(args):
    report = run_demo(n=args.n)
    _emit(args, report.to_dict(), report.lines())
    return EXIT_OK if report.passed else EXIT_VERIFICATION


def _cmd_series_branches(args):
    sign = args.sign
    y, x = branch_series(sign, args.n)
    payload = {"sign": sign, "order": args.n, "y": str(y), "x": str(x)}
    _emit(args, payload, [f"y = {y}", f"x = {x}"])
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tropstrat",
        description="Exact initial degenerations, ray stratifications and "
                    "Bergman fans over Q(t).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ideal=True, weight=False):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if ideal:
            p.add_argument("--vars", required=True, help="comma-separated variables")
            p.add_argument("--ideal", required=True,
                           help="ideal file (one polynomial per line) or inline text")
        if weight:
            p.add_argument("--w", required=True, help="comma-separated rational weights")

    p = sub.add_parser("initial", help="initial ideal at a weight")
    common(p, weight=True)
    p.set_defaults(func=_cmd_initial)

    p = sub.add_parser("tropmember", help="tropical membership test")
    common(p, weight=True)
    p.set_defaults(func=_cmd_tropmember)

    p = sub.add_parser("homspace", help="homogeneity space of a polynomial ideal")
    common(p)
    p.set_defaults(func=_cmd_homspace)

    p = sub.add_parser("stratify-ray", help="stratify a rational ray segment")
    common(p)
    p.add_argument("--base", required=True)
    p.add_argument("--dir", required=True)
    p.add_argument("--lo", required=True)
    p.add_argument("--hi", required=True)
    p.add_argument("--cap", default="10", help="cap for infinite endpoints")
    p.set_defaults(func=_cmd_stratify_ray)

    p = sub.add_parser("compare", help="Groebner vs topological dimensions")
    common(p, weight=True)
    p.add_argument("--support", required=True,
                   help="candidate support ideal (file or inline)")
    p.add_argument("--m-max", type=int, default=16, dest="m_max")
    p.set_defaults(func=_cmd_compare)

    for name, func, help_text in (
            ("bergman", _cmd_bergman, "Bergman fan membership"),
            ("matroid-min", _cmd_matroid_min, "weight-minimizing matroid")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true")
        p.add_argument("--bases", help="e.g. 12,13,23")
        p.add_argument("--n", type=int, help="ground set size")
        p.add_argument("--matrix", help="matrix file or inline rows")
        p.add_argument("--w", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("paper-demo", help="full verification report for the example curve")
    p.add_argument("--json", action="store_true")
    p.add_argument("--n", type=int, default=10, help="series truncation order")
    p.set_defaults(func=_cmd_paper_demo)

    p = sub.add_parser("series-branches", help="branch expansions of the example curve")
    p.add_argument("--json", action="store_true")
    p.add_argument("--sign", choices=["+", "-"], required=True)
    p.add_argument("--n", type=int, default=10)
    p.set_defaults(func=_cmd_series_branches)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OutsideTropicalVariety, SupportMismatch, SupportUnverified,
            VerificationFailure) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except StepLimitExceeded as exc:
        print(f"step limit: {exc}", file=sys.stderr)
        return EXIT_STEP_LIMIT
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

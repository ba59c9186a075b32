"""Text formats: polynomial expressions, ideal files, weights, matroids.

Polynomial syntax: integer literals, the scalar `t`, declared variables,
`+ - * / ^` and parentheses.  `^` takes an integer exponent (optionally
negative); `/` requires an invertible divisor (a pure scalar or a single
Laurent term).  Rationals everywhere are written `p/q`, never as decimals.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .laurent import LaurentPoly
from .scalars import TScalar


class ParseError(ValueError):
    def __init__(self, message, line=1, col=1):
        super().__init__(f"{message} (line {line}, column {col})")
        self.message = message
        self.line = line
        self.col = col


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*/^()]))")


def _tokenize(text, line=1):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos]!r}", line, pos + 1)
            break
        col = m.start(m.lastindex) + 1
        tokens.append((m.group(m.lastindex), col))
        pos = m.end()
    tokens.append((None, len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text, vars, line=1):
        self.vars = tuple(vars)
        self.line = line
        self.tokens = _tokenize(text, line)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message, col=None):
        if col is None:
            col = self.tokens[self.pos][1]
        raise ParseError(message, self.line, col)

    def parse(self):
        poly = self.expr()
        if self.peek() is not None:
            self.error(f"trailing input {self.peek()!r}")
        return poly

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op, _ = self.next()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek() in ("*", "/"):
            op, col = self.next()
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                value = value * self._invert(rhs, col)
        return value

    def factor(self):
        sign = 1
        while self.peek() in ("+", "-"):
            op, _ = self.next()
            if op == "-":
                sign = -sign
        value = self.atom()
        if self.peek() == "^":
            _, col = self.next()
            value = self._power(value, self._int_exponent(), col)
        return value if sign > 0 else -value

    def _int_exponent(self):
        sign = 1
        if self.peek() == "-":
            self.next()
            sign = -1
        tok, col = self.next()
        if tok is None or not tok.isdigit():
            self.error("expected integer exponent", col)
        return sign * int(tok)

    def atom(self):
        tok, col = self.next()
        if tok is None:
            self.error("unexpected end of input", col)
        if tok == "(":
            value = self.expr()
            closing, ccol = self.next()
            if closing != ")":
                self.error("expected ')'", ccol)
            return value
        if tok.isdigit():
            return LaurentPoly.constant(self.vars, int(tok))
        if tok == "t":
            return LaurentPoly.constant(self.vars, TScalar.t_power(1))
        if tok in self.vars:
            return LaurentPoly.variable(self.vars, tok)
        if re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", tok):
            self.error(f"unknown variable {tok!r}", col)
        self.error(f"unexpected token {tok!r}", col)

    def _invert(self, poly, col):
        try:
            return self._power(poly, -1, col)
        except ParseError:
            raise
        except ZeroDivisionError:
            self.error("division by zero", col)

    def _power(self, poly, n, col):
        if n >= 0:
            return poly ** n
        if len(poly.terms) == 1:
            return poly ** n
        # a multi-term pure scalar (only the zero monomial is impossible
        # with >1 terms) is not invertible in the Laurent ring
        if not poly.terms:
            self.error("division by zero", col)
        self.error("divisor must be a scalar or a single term", col)


def parse_poly(text, vars, line=1):
    """Parse a Laurent polynomial over Q(t) in the declared variables."""
    return _Parser(text, vars, line).parse()


def parse_scalar(text):
    """Parse an element of Q(t)."""
    poly = parse_poly(text, ())
    if not poly.terms:
        return TScalar([])
    return poly.terms[()]


def parse_rational(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}: {exc}") from None


def parse_weight(text, nvars=None):
    parts = [p for p in text.split(",") if p.strip()]
    w = tuple(parse_rational(p) for p in parts)
    if nvars is not None and len(w) != nvars:
        raise ParseError(f"expected {nvars} weight entries, got {len(w)}")
    return w


def parse_vars(text):
    names = tuple(v.strip() for v in text.split(",") if v.strip())
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable names")
    for name in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
            raise ParseError(f"bad variable name {name!r}")
        if name == "t":
            raise ParseError("'t' is reserved for the valued scalar")
    return names


def parse_ideal_text(text, vars):
    """One polynomial per line; '#' starts a comment."""
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        poly = parse_poly(stripped, vars, line=lineno)
        if poly:
            gens.append(poly)
    return gens


def parse_matroid_text(text):
    """`N=3; bases=12,13,23` (elements 1..9 as digits, or dot-separated)."""
    from .matroids import Matroid

    fields = {}
    for chunk in re.split(r"[;\n]", text):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise ParseError(f"expected key=value, got {chunk!r}")
        key, value = chunk.split("=", 1)
        fields[key.strip().lower()] = value.strip()
    if "n" not in fields or "bases" not in fields:
        raise ParseError("matroid text needs N=... and bases=...")
    n = int(fields["n"])
    bases = []
    for token in fields["bases"].split(","):
        token = token.strip()
        if not token:
            continue
        if token.isdigit():
            elems = [int(ch) for ch in token]
        else:
            elems = [int(p) for p in re.split(r"[.\s-]+", token) if p]
        bases.append(frozenset(elems))
    return Matroid(n, bases)


def parse_matrix_text(text):
    """Rows of rationals, one row per line, entries split on spaces/commas."""
    rows = []
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        entries = [parse_rational(p) for p in re.split(r"[,\s]+", stripped) if p]
        rows.append(entries)
    if rows and len({len(r) for r in rows}) != 1:
        raise ParseError("ragged matrix rows")
    return rows


def fmt_fraction(q):
    return str(Fraction(q))

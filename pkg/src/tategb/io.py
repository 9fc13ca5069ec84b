"""Expression parser, problem files and JSON result documents."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .arith import ValuedField, format_rational, format_value, parse_rational
from .order import TIE_BREAKS
from .poly import Polynomial, Ring, format_polynomial


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int | None = None, src: str | None = None):
        self.pos = pos
        self.src = src
        where = f" at position {pos}" if pos is not None else ""
        super().__init__(f"{msg}{where}")


_TOKEN = re.compile(r"(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|([-+*^()])")


def _tokenize(src: str):
    toks = []
    pos = 0
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos == len(src):
            break
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", pos, src)
        if m.group(1):
            toks.append(("num", m.group(1), pos))
        elif m.group(2):
            toks.append(("name", m.group(2), pos))
        else:
            toks.append((m.group(3), m.group(3), pos))
        pos = m.end()
    toks.append(("end", "", len(src)))
    return toks


class _Parser:
    def __init__(self, src: str, ring: Ring):
        self.src, self.ring = src, ring
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = tok[1] or "end of input"
            raise ParseError(f"expected {kind!r}, found {what!r}", tok[2], self.src)
        self.i += 1
        return tok

    def expr(self) -> Polynomial:
        neg = False
        if self.peek()[0] in ("+", "-"):
            neg = self.take()[0] == "-"
        acc = self.term()
        if neg:
            acc = -acc
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def exponent(self) -> int:
        if self.peek()[0] != "^":
            return 1
        self.take()
        kind, text, pos = self.peek()
        if kind != "num" or "/" in text:
            raise ParseError("malformed exponent", pos, self.src)
        self.take()
        return int(text)

    def factor(self) -> Polynomial:
        kind, text, pos = self.peek()
        if kind == "num":
            self.take()
            try:
                base = self.ring.constant(parse_rational(text))
            except ValueError as e:
                raise ParseError(str(e), pos, self.src) from None
            if self.peek()[0] == "^":
                raise ParseError("exponent on a number", self.peek()[2], self.src)
            return base
        if kind == "name":
            self.take()
            if text not in self.ring.variables:
                raise ParseError(f"unknown variable {text!r}", pos, self.src)
            return self.ring.var(text) ** self.exponent()
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner ** self.exponent()
        raise ParseError(f"unexpected {text or 'end of input'!r}", pos, self.src)


def parse_polynomial(src: str, ring: Ring) -> Polynomial:
    try:
        p = _Parser(src, ring)
        f = p.expr()
        tok = p.peek()
        if tok[0] != "end":
            raise ParseError(f"trailing input {tok[1]!r}", tok[2], src)
        return f
    except ZeroDivisionError as e:
        raise ParseError("zero denominator", None, src) from e
    except ValueError as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(str(e), None, src) from e


def _rat(x, what: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise ParseError(f"{what}: expected a rational string, got {x!r}")
    try:
        return parse_rational(str(x).strip())
    except ValueError as e:
        raise ParseError(f"{what}: {e}") from None


def _vec(xs, n: int, what: str) -> tuple:
    if not isinstance(xs, list):
        raise ParseError(f"{what}: expected a list")
    if len(xs) != n:
        raise ParseError(f"{what}: expected {n} entries, got {len(xs)}")
    return tuple(_rat(x, what) for x in xs)


@dataclass
class Problem:
    ring: Ring
    generators: list
    log_radii: tuple | None = None
    polyhedron_vertices: list | None = None
    weight: tuple | None = None
    cap: Fraction | None = None
    tie_break: str = "grevlex"
    f: Polynomial | None = None


def load_problem(doc) -> Problem:
    """Validate a problem document (a dict, or JSON text)."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e.msg}", e.pos) from None
    if not isinstance(doc, dict):
        raise ParseError("problem file must be a JSON object")
    for key in ("prime", "variables", "generators"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}")
    prime = doc["prime"]
    if isinstance(prime, bool) or not isinstance(prime, int):
        raise ParseError("prime must be an integer")
    field = ValuedField(prime)  # ValueError for non-primes, a domain error
    names = doc["variables"]
    if not isinstance(names, list) or not all(isinstance(v, str) for v in names):
        raise ParseError("variables must be a list of names")
    ring = Ring(tuple(names), field)
    n = ring.nvars
    gens = doc["generators"]
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise ParseError("generators must be a list of expression strings")
    prob = Problem(ring, [parse_polynomial(g, ring) for g in gens])
    if "log_radii" in doc:
        prob.log_radii = _vec(doc["log_radii"], n, "log_radii")
    if "polyhedron_vertices" in doc:
        vs = doc["polyhedron_vertices"]
        if not isinstance(vs, list):
            raise ParseError("polyhedron_vertices must be a list")
        prob.polyhedron_vertices = [_vec(v, n, "polyhedron_vertices") for v in vs]
    if "weight" in doc:
        prob.weight = _vec(doc["weight"], n + 1, "weight")
    if "cap" in doc:
        prob.cap = _rat(doc["cap"], "cap")
    if "tie_break" in doc:
        if doc["tie_break"] not in TIE_BREAKS:
            raise ParseError(f"tie_break must be one of {sorted(TIE_BREAKS)}")
        prob.tie_break = doc["tie_break"]
    if "f" in doc:
        if not isinstance(doc["f"], str):
            raise ParseError("f must be an expression string")
        prob.f = parse_polynomial(doc["f"], ring)
    return prob


# result documents

def poly_out(f: Polynomial) -> str:
    return format_polynomial(f)


def polys_out(F) -> list:
    return sorted((format_polynomial(f) for f in F), key=lambda s: (len(s), s))


def vec_out(v) -> list:
    return [format_value(x) for x in v]


def term_out(t, ring: Ring) -> str:
    return format_polynomial(Polynomial(ring, [(t.monomial, t.coeff)]))


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"

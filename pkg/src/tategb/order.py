"""Gauss valuations and the valuation-first term orders.

A term ``c*X^a`` has Gauss valuation ``val_p(c) - r.a`` for log-radii
``r``.  Terms are ordered by *smaller* valuation first, then by a
classical monomial order; in homogenized mode total degree is compared
before the monomial order, which then only looks at the non-trailing
variables.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import lp
from .arith import INF, ValuedField, parse_rational
from .poly import Polynomial, Term, grevlex_key

TIE_BREAKS = ("grevlex", "lex", "grlex")


def radii(*values) -> tuple:
    """Coerce to a log-radii tuple of Fractions (strings allowed)."""
    if len(values) == 1 and not isinstance(values[0], (int, Fraction, str)):
        values = tuple(values[0])
    return tuple(parse_rational(v) if isinstance(v, str) else Fraction(v) for v in values)


@lru_cache(maxsize=65536)
def _val(num: int, den: int, p: int) -> Fraction:
    k = 0
    while num % p == 0:
        num //= p
        k += 1
    while den % p == 0:
        den //= p
        k -= 1
    return Fraction(k)


def coeff_val(c: Fraction, p: int):
    if not c:
        return INF
    return _val(abs(c.numerator), c.denominator, p)


def dot(r, a) -> Fraction:
    return sum((ri * ai for ri, ai in zip(r, a)), Fraction(0))


def tie_key(tie: str):
    if tie == "grevlex":
        return grevlex_key
    if tie == "lex":
        return lambda m: m
    if tie == "grlex":
        return lambda m: (sum(m), m)
    raise ValueError(f"unknown tie-break {tie!r}; expected one of {TIE_BREAKS}")


@dataclass(frozen=True)
class TateOrder:
    radii: tuple
    tie: str = "grevlex"
    homogenized: bool = False

    def __post_init__(self):
        object.__setattr__(self, "radii", radii(self.radii))
        tie_key(self.tie)

    def check(self, ring):
        if len(self.radii) != ring.nvars:
            raise ValueError(
                f"log-radii of length {len(self.radii)} for ring {ring.variables}"
            )

    def val(self, term: Term, p: int):
        return coeff_val(term.coeff, p) - dot(self.radii, term.monomial)

    def key(self, term: Term, p: int):
        """Sort key: larger key means larger term."""
        tk = tie_key(self.tie)
        m = term.monomial
        if self.homogenized:
            return (-self.val(term, p), sum(m), tk(m[:-1]))
        return (-self.val(term, p), tk(m))

    def keyfunc(self, p: int):
        tk = tie_key(self.tie)
        r = self.radii
        if self.homogenized:
            return lambda t: (-(coeff_val(t.coeff, p) - dot(r, t.monomial)), sum(t.monomial), tk(t.monomial[:-1]))
        return lambda t: (-(coeff_val(t.coeff, p) - dot(r, t.monomial)), tk(t.monomial))


def homogenized_order(r, tie: str = "grevlex") -> TateOrder:
    """The order on K[X,t] with t's log-radius appended as 0."""
    return TateOrder(radii(r) + (Fraction(0),), tie, True)


def _p(field) -> int:
    return field.p if isinstance(field, ValuedField) else int(field)


def gauss_val(t: Term, r, field):
    r = radii(r)
    return coeff_val(Fraction(t.coeff), _p(field)) - dot(r, t.monomial)


def gauss_val_poly(f: Polynomial, r, field=None):
    if f.is_zero():
        return INF
    p = _p(field or f.ring.field)
    r = radii(r)
    return min(coeff_val(c, p) - dot(r, m) for c, m in f.terms)


def support_r(f: Polynomial, r) -> set:
    if f.is_zero():
        raise ValueError("r-support of the zero polynomial")
    p = f.ring.field.p
    r = radii(r)
    vals = {m: coeff_val(c, p) - dot(r, m) for c, m in f.terms}
    v = min(vals.values())
    return {m for m, x in vals.items() if x == v}


def initial_part(f: Polynomial, r) -> Polynomial:
    return f.restrict(support_r(f, r))


def compare(t1: Term, t2: Term, o: TateOrder, field) -> int:
    """-1, 0 or 1 as t1 is less than, equal to, greater than t2."""
    p = _p(field)
    k1, k2 = o.key(Term(Fraction(t1[0]), tuple(t1[1])), p), o.key(Term(Fraction(t2[0]), tuple(t2[1])), p)
    return (k1 > k2) - (k1 < k2)


def leading_term(f: Polynomial, o: TateOrder) -> Term:
    if f.is_zero():
        raise ValueError("leading term of the zero polynomial")
    return max(f.terms, key=o.keyfunc(f.ring.field.p))


def leading_monomial(f: Polynomial, o: TateOrder) -> tuple:
    return leading_term(f, o).monomial


def leading_coeff(f: Polynomial, o: TateOrder) -> Fraction:
    return leading_term(f, o).coeff


def lt_set(F: Sequence[Polynomial], o: TateOrder) -> frozenset:
    out = set()
    for f in F:
        if f.is_zero():
            raise ValueError("lt_set of a family containing zero")
        out.add(leading_term(f, o))
    return frozenset(out)


def _postcondition_holds(F, s, o: TateOrder) -> bool:
    p = F[0].ring.field.p
    s_order = TateOrder(s, o.tie)
    for f in F:
        if len(support_r(f, s)) != 1:
            return False
        if leading_term(f, s_order) != leading_term(f, o):
            return False
    terms = {t for f in F for t in f.terms}
    for t1, t2 in itertools.combinations(terms, 2):
        same = t1.monomial == t2.monomial and coeff_val(t1.coeff, p) == coeff_val(t2.coeff, p)
        if same:
            continue
        v1, v2 = gauss_val(t1, s, p), gauss_val(t2, s, p)
        if v1 == v2:
            return False
        if (o.key(t1, p) > o.key(t2, p)) != (v1 < v2):
            return False
    return True


def realize_term_order(F: Sequence[Polynomial], r, tie: str = "grevlex") -> tuple:
    """Log-radii s whose pure valuation order agrees with <_{r,tie} on the terms of F.

    The returned s also makes every initial part of a member of F a single
    term.  r itself is returned when no two terms tie in valuation.
    """
    F = [f for f in F]
    if any(f.is_zero() for f in F):
        raise ValueError("realize_term_order on a family containing zero")
    r = radii(r)
    if not F:
        return r
    o = TateOrder(r, tie)
    p = F[0].ring.field.p
    n = F[0].ring.nvars
    tk = tie_key(tie)
    terms = sorted({t for f in F for t in f.terms})
    monos = sorted({t.monomial for t in terms}, key=tk)
    pairs = list(itertools.combinations(terms, 2))
    if _postcondition_holds(F, r, o):
        return r

    # weight u with a.u > b.u whenever a >_tie b, on the finite monomial set
    cons = [lp.ge(tuple(x - y for x, y in zip(hi, lo)), 1) for lo, hi in zip(monos, monos[1:])]
    u = lp.lp_feasible(cons, n) if cons else (Fraction(0),) * n
    if u is None:
        raise RuntimeError("no weight vector realizes the tie-break order")

    bounds = []
    for t1, t2 in pairs:
        gap = abs(gauss_val(t1, r, p) - gauss_val(t2, r, p))
        den = abs(dot(u, t1.monomial) - dot(u, t2.monomial))
        if gap and den:
            bounds.append(gap / den)
    eps = min(bounds) / 2 if bounds else Fraction(1)
    for sign in (1, -1):
        s = tuple(ri + sign * eps * ui for ri, ui in zip(r, u))
        if _postcondition_holds(F, s, o):
            return s
    raise RuntimeError("perturbation failed to realize the term order")

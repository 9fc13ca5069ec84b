"""Tate algebras over polyhedral domains: écarts, Mora's weak normal form,
and leading-term candidates of principal ideals.

A domain is given by vertices s_1..s_l; it is the convex hull of the
translated negative orthants s_i + R_{<0}^n.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import lp
from .arith import INF
from .gb import GBasis, spoly
from .order import TateOrder, dot, gauss_val, gauss_val_poly, leading_term, radii, support_r
from .poly import Polynomial, Term, mono_div, mono_divides, same_ring

EXACT = "exact"
CONVERGED = "converged_to_zero_at_cap"


@dataclass(frozen=True)
class PolyhedralDomain:
    vertices: tuple

    def __post_init__(self):
        vs = tuple(radii(v) for v in self.vertices)
        object.__setattr__(self, "vertices", vs)
        if not vs:
            raise ValueError("a polyhedral domain needs at least one vertex")
        if len({len(v) for v in vs}) != 1:
            raise ValueError("vertices of different dimensions")
        if len(set(vs)) != len(vs):
            raise ValueError("repeated vertex")
        for a, b in itertools.permutations(vs, 2):
            if all(x <= y for x, y in zip(a, b)):
                raise ValueError(f"vertex {a} is dominated by {b}")

    @property
    def dim(self) -> int:
        return len(self.vertices[0])


def domain_member(r, P: PolyhedralDomain) -> bool:
    """r <= sum(lambda_i s_i) for some convex combination lambda."""
    r = radii(r)
    if len(r) != P.dim:
        raise ValueError("dimension mismatch")
    l = len(P.vertices)
    cons = [lp.ge([1 if j == i else 0 for j in range(l)]) for i in range(l)]
    cons.append(lp.eq([1] * l, 1))
    for k in range(P.dim):
        cons.append(lp.ge([s[k] for s in P.vertices], r[k]))
    return lp.lp_feasible(cons, l) is not None


def deg_sr(f: Polynomial, s, r) -> Fraction:
    """max of (s - r).a over the s-support of f."""
    if f.is_zero():
        raise ValueError("(s,r)-degree of zero")
    s, r = radii(s), radii(r)
    diff = [a - b for a, b in zip(s, r)]
    return max(dot(diff, m) for m in support_r(f, s))


def ecart(f: Polynomial, s, r, kind: int, tie: str = "grevlex") -> Fraction:
    if f.is_zero():
        raise ValueError("écart of zero")
    s, r = radii(s), radii(r)
    lt = leading_term(f, TateOrder(r, tie))
    if kind == 0:
        return gauss_val(lt, s, f.ring.field) - gauss_val_poly(f, s)
    if kind == 1:
        diff = [a - b for a, b in zip(s, r)]
        return deg_sr(f, s, r) - dot(diff, lt.monomial)
    raise ValueError("écart kind is 0 or 1")


def ecart_tuple(f: Polynomial, P: PolyhedralDomain, r, tie: str = "grevlex") -> tuple:
    out = []
    for s in P.vertices:
        out.append(ecart(f, s, r, 0, tie))
        out.append(ecart(f, s, r, 1, tie))
    return tuple(out)


class WNFStalled(RuntimeError):
    """Step guard hit; ``partial`` holds the state reached so far."""

    def __init__(self, msg, partial):
        super().__init__(msg)
        self.partial = partial


@dataclass
class WNFResult:
    remainder: Polynomial
    status: str
    mu: Polynomial
    cofactors: tuple
    cap: Fraction
    steps: int = 0
    trace: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.status == EXACT


@dataclass
class _Entry:
    poly: Polynomial
    mu: Polynomial
    u: list  # element = mu*f - sum(u_i g_i)


def mora_wnf(
    f: Polynomial,
    G: Sequence[Polynomial],
    P: PolyhedralDomain,
    r,
    cap=50,
    tie: str = "grevlex",
    max_steps: int = 100_000,
    record: bool = False,
) -> WNFResult:
    """Mora's weak normal form of f modulo G at log-radii r inside P.

    Reducers are chosen by lexicographically smallest écart tuple (first
    in pool order on ties); h joins the pool when the chosen reducer has
    some écart larger than h's.  Stops with status ``exact`` on zero or
    irreducible h, and with ``converged_to_zero_at_cap`` once val_r(h) and
    every vertex valuation of h exceed ``cap``.
    """
    r = radii(r)
    cap = Fraction(cap)
    if cap <= 0:
        raise ValueError("cap must be positive")
    if not domain_member(r, P):
        raise ValueError(f"log-radii {r} outside the polyhedral domain")
    ring = f.ring
    G = list(G)
    if G:
        same_ring([f] + G)
    o = TateOrder(r, tie)
    zero, one = ring.zero(), ring.one()
    s_count = len(G)

    pool = []
    for i, g in enumerate(G):
        if g.is_zero():
            continue
        u = [zero] * s_count
        u[i] = -one
        pool.append(_Entry(g, zero, u))
    h = _Entry(f, one, [zero] * s_count)

    trace, violations = [], []
    steps = 0
    status = EXACT
    while not h.poly.is_zero():
        vr = gauss_val_poly(h.poly, r)
        vs = [gauss_val_poly(h.poly, s) for s in P.vertices]
        if vr > cap and all(v > cap for v in vs):
            status = CONVERGED
            break
        lt_h = leading_term(h.poly, o)
        cands = [e for e in pool if mono_divides(leading_term(e.poly, o).monomial, lt_h.monomial)]
        if not cands:
            break
        if steps >= max_steps:
            partial = WNFResult(h.poly, "stalled", h.mu, tuple(h.u), cap, steps, trace, violations)
            raise WNFStalled(f"weak normal form did not settle in {max_steps} steps", partial)
        eh = ecart_tuple(h.poly, P, r, tie)
        scored = [(ecart_tuple(e.poly, P, r, tie), k, e) for k, e in enumerate(cands)]
        eg, _, g = min(scored, key=lambda x: (x[0], x[1]))
        if any(a > b for a, b in zip(eg, eh)):
            pool.append(_Entry(h.poly, h.mu, list(h.u)))
        lt_g = leading_term(g.poly, o)
        tc = lt_h.coeff / lt_g.coeff
        tm = mono_div(lt_h.monomial, lt_g.monomial)
        new_poly = h.poly - g.poly.mul_term(tc, tm)
        new = _Entry(
            new_poly,
            h.mu - g.mu.mul_term(tc, tm),
            [a - b.mul_term(tc, tm) for a, b in zip(h.u, g.u)],
        )
        # step monotonicity per vertex when the reducer's écarts are no larger
        for i, sv in enumerate(P.vertices):
            if eg[2 * i] <= eh[2 * i] and eg[2 * i + 1] <= eh[2 * i + 1] and not new_poly.is_zero():
                before, after = vs[i], gauss_val_poly(new_poly, sv)
                if after < before:
                    violations.append((steps, sv, "valuation decreased"))
                elif after == before and deg_sr(new_poly, sv, r) > deg_sr(h.poly, sv, r):
                    violations.append((steps, sv, "degree increased"))
        if record:
            trace.append({"step": steps, "lt": lt_h, "reducer": g.poly, "ecart_h": eh, "ecart_g": eg})
        h = new
        steps += 1

    cof = tuple(h.u)
    return WNFResult(h.poly, status, h.mu, cof, cap, steps, trace, violations)


def local_gb_wnf(
    F: Sequence[Polynomial], P: PolyhedralDomain, r, cap=50, tie: str = "grevlex"
) -> GBasis:
    """Buchberger's algorithm with Mora's weak normal form as reduction.

    S-pairs whose remainder only converges to zero up to the cap are
    dropped and the basis is flagged ``conditional``.
    """
    r = radii(r)
    if not domain_member(r, P):
        raise ValueError(f"log-radii {r} outside the polyhedral domain")
    o = TateOrder(r, tie)
    G = []
    for f in F:
        if not f.is_zero() and f not in G:
            G.append(f)
    pairs = list(itertools.combinations(range(len(G)), 2))
    conditional = False
    while pairs:
        i, j = pairs.pop(0)
        s = spoly(G[i], G[j], o)
        if s.is_zero():
            continue
        res = mora_wnf(s, G, P, r, cap, tie)
        if res.status == CONVERGED:
            conditional = True
            continue
        if not res.remainder.is_zero():
            G.append(res.remainder)
            pairs.extend((k, len(G) - 1) for k in range(len(G) - 1))
    return GBasis(tuple(G), o, conditional=conditional)


def lifted_point(t: Term, P: PolyhedralDomain, field) -> tuple:
    return tuple(gauss_val(t, s, field) for s in P.vertices) + tuple(Fraction(e) for e in t.monomial)


def terms_p_principal(f: Polynomial, P: PolyhedralDomain) -> set:
    """Terms of f minimal for the product order on (vertex valuations, exponents)."""
    if f.is_zero():
        raise ValueError("terms_p_principal of zero")
    pts = [(lifted_point(t, P, f.ring.field), t) for t in f.terms]
    out = set()
    for q, t in pts:
        dominated = any(
            q2 != q and all(a <= b for a, b in zip(q2, q)) for q2, _ in pts
        )
        if not dominated:
            out.add(t)
    return out

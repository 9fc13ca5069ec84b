"""Classical Buchberger over the rationals, no valuation involved.

Used for the saturation test behind the tropical variety and as an
independent membership oracle.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from .order import tie_key
from .poly import Polynomial, Ring, mono_div, mono_divides, mono_lcm, same_ring


def lead(f: Polynomial, tie: str = "grevlex"):
    tk = tie_key(tie)
    return max(f.terms, key=lambda t: tk(t.monomial))


def normal_form(f: Polynomial, G: Sequence[Polynomial], tie: str = "grevlex") -> Polynomial:
    """Full reduction of f by G for the monomial order ``tie``."""
    tk = tie_key(tie)
    leads = [(lead(g, tie), g) for g in G if not g.is_zero()]
    rem = {}
    h = f.as_dict()
    while h:
        m = max(h, key=tk)
        c = h[m]
        for (lc, lm), g in leads:
            if mono_divides(lm, m):
                q = c / lc
                mu = mono_div(m, lm)
                for (gc, gm) in g.terms:
                    k = tuple(a + b for a, b in zip(gm, mu))
                    s = h.get(k, 0) - q * gc
                    if s:
                        h[k] = s
                    else:
                        h.pop(k, None)
                break
        else:
            rem[m] = c
            del h[m]
    return Polynomial(f.ring, rem)


def groebner(F: Sequence[Polynomial], tie: str = "grevlex") -> list:
    """Reduced Gröbner basis over Q, monic."""
    G = [f for f in F if not f.is_zero()]
    if not G:
        return []
    G = [g / lead(g, tie).coeff for g in G]
    pairs = list(itertools.combinations(range(len(G)), 2))
    while pairs:
        i, j = pairs.pop(0)
        (ci, mi), (cj, mj) = lead(G[i], tie), lead(G[j], tie)
        if all(a == 0 or b == 0 for a, b in zip(mi, mj)):
            continue  # coprime leading monomials
        lcm = mono_lcm(mi, mj)
        s = G[i].mul_term(1 / ci, mono_div(lcm, mi)) - G[j].mul_term(1 / cj, mono_div(lcm, mj))
        h = normal_form(s, G, tie)
        if not h.is_zero():
            h = h / lead(h, tie).coeff
            if h.is_constant():
                return [h.ring.one()]
            G.append(h)
            pairs.extend((k, len(G) - 1) for k in range(len(G) - 1))
    # interreduce
    G.sort(key=lambda g: tie_key(tie)(lead(g, tie).monomial))
    minimal = []
    for g in G:
        m = lead(g, tie).monomial
        if not any(mono_divides(lead(k, tie).monomial, m) for k in minimal):
            minimal = [k for k in minimal if not mono_divides(m, lead(k, tie).monomial)]
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        out.append(normal_form(g, others, tie))
    out = [g / lead(g, tie).coeff for g in out]
    out.sort(key=lambda g: tie_key(tie)(lead(g, tie).monomial))
    return out


def ideal_member(f: Polynomial, F: Sequence[Polynomial], tie: str = "grevlex") -> bool:
    return normal_form(f, groebner(F, tie), tie).is_zero()


def contains_monomial(J_gens: Sequence[Polynomial]) -> bool:
    """True iff <J_gens> contains a monomial, i.e. its saturation by the
    product of all variables is the unit ideal.

    Adjoins a fresh variable y and tests 1 in <J_gens, y*x_1*...*x_n - 1>.
    """
    J = [g for g in J_gens if not g.is_zero()]
    if not J:
        return False
    ring = same_ring(J)
    name = "y"
    while name in ring.variables:
        name += "_"
    big = Ring(ring.variables + (name,), ring.field)
    lifted = [Polynomial(big, [(m + (0,), c) for m, c in g.as_dict().items()]) for g in J]
    lifted.append(big.monomial((1,) * big.nvars) - 1)
    G = groebner(lifted)
    return any(g.is_constant() and not g.is_zero() for g in G)

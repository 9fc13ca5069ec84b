"""Valued Newton polytopes and their Minkowski-sum vertices.

Each term ``c*X^a`` lifts to the point ``(val_p(c), a)``; the polytope of a
polynomial is the hull of its lifted points plus the ray ``(1,0,...,0)``.
A vertex of the Minkowski sum picks one lifted point per polynomial, and
is certified by ``U = (1,u)`` on which that selection is the strict
unique minimum in every factor.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import lp
from .order import coeff_val, dot
from .poly import Polynomial, Term


@dataclass(frozen=True)
class NewtonPolytope:
    points: tuple  # lifted points (val, a_1, ..., a_n), one per term
    terms: tuple

    @property
    def ray(self):
        return (1,) + (0,) * (len(self.points[0]) - 1)


@dataclass(frozen=True)
class VertexCertificate:
    vertex: tuple
    direction: tuple  # U = (1, u_1, ..., u_n)
    selection: tuple  # index of the chosen term in each polynomial
    terms: tuple  # the chosen terms, i.e. the leading terms for <_u

    @property
    def u(self) -> tuple:
        return self.direction[1:]

    @property
    def radii(self) -> tuple:
        """Log-radii realizing this vertex: minimizing val + u.a is
        minimizing the Gauss valuation val - r.a at r = -u."""
        return tuple(-x for x in self.direction[1:])


def lift(t: Term, p: int) -> tuple:
    return (coeff_val(t.coeff, p),) + tuple(Fraction(e) for e in t.monomial)


def newton_polytope(f: Polynomial, field=None) -> NewtonPolytope:
    if f.is_zero():
        raise ValueError("Newton polytope of zero")
    p = (field or f.ring.field).p
    return NewtonPolytope(tuple(lift(t, p) for t in f.terms), f.terms)


def _cone_constraints(polys: Sequence[NewtonPolytope], selection) -> list:
    """Strict conditions on u for the selected point to be the unique
    minimum of (1,u).q within each factor."""
    cons = []
    for P, j in zip(polys, selection):
        a = P.points[j]
        for k, b in enumerate(P.points):
            if k == j:
                continue
            # (b - a).(1,u) > 0
            cons.append(lp.gt(tuple(bi - ai for ai, bi in zip(a[1:], b[1:])), a[0] - b[0]))
    return cons


def cone_point(polys: Sequence[NewtonPolytope], selection, n: int):
    cons = _cone_constraints(polys, selection)
    if not cons:
        return (Fraction(0),) * n
    return lp.lp_feasible(cons, n)


def minkowski_vertices(F: Sequence[Polynomial], field=None) -> list:
    """All vertices of the Minkowski sum of the Newton polytopes, certified.

    Selections are built factor by factor; a partial selection whose
    open cone is already empty is pruned.
    """
    F = list(F)
    if not F:
        return []
    if any(f.is_zero() for f in F):
        raise ValueError("minkowski_vertices of a family containing zero")
    polys = [newton_polytope(f, field) for f in F]
    n = F[0].ring.nvars
    out = []

    def walk(prefix):
        if prefix:
            u = cone_point(polys[: len(prefix)], prefix, n)
            if u is None:
                return
        else:
            u = (Fraction(0),) * n
        if len(prefix) == len(polys):
            vertex = tuple(
                sum(c) for c in zip(*(P.points[j] for P, j in zip(polys, prefix)))
            )
            terms = tuple(P.terms[j] for P, j in zip(polys, prefix))
            out.append(VertexCertificate(vertex, (Fraction(1),) + tuple(u), tuple(prefix), terms))
            return
        for j in range(len(polys[len(prefix)].points)):
            walk(prefix + (j,))

    walk(())
    out.sort(key=lambda c: c.vertex)
    return out


def candidate_points(F: Sequence[Polynomial], field=None) -> list:
    """Every sum of one lifted point per factor (the full index product)."""
    polys = [newton_polytope(f, field) for f in F]
    return [
        tuple(sum(c) for c in zip(*pts))
        for pts in itertools.product(*(P.points for P in polys))
    ]


def certificate_is_valid(cert: VertexCertificate, F: Sequence[Polynomial], field=None) -> bool:
    """Direct check that U.vertex is the strict unique minimum over candidates."""
    U = cert.direction
    mine = dot(U, cert.vertex)
    for q in candidate_points(F, field):
        if q != cert.vertex and dot(U, q) <= mine:
            return False
    return True

"""Weighted degrees, analytic Gröbner cones and fans, tropical varieties.

Weights are ``w = (w0, w1, ..., wn)`` with ``w0 < 0``; a term ``c*X^a`` has
weighted degree ``w0*val_p(c) + w.a``, i.e. ``w . (val_p(c), a)``.  Every
cone is stored as linear conditions on w: equalities ``v.w = 0`` and strict
inequalities ``v.w > 0``.  The condition ``w0 < 0`` is always among the
inequalities.
"""
from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import lp
from .classical import contains_monomial
from .gb import NotHomogeneous, reduced_gb
from .order import TateOrder, coeff_val, dot, leading_term, radii
from .poly import Polynomial, Term, same_ring
from .polytope import lift


def weight(*values) -> tuple:
    w = radii(*values)
    if not w or w[0] >= 0:
        raise ValueError(f"weight vector needs w0 < 0, got {w}")
    return w


def deg_w(t: Term, w, field) -> Fraction:
    p = field.p if hasattr(field, "p") else int(field)
    c, m = t
    return Fraction(w[0]) * coeff_val(Fraction(c), p) + dot(w[1:], m)


def compatible_radii(w) -> tuple:
    w = weight(w)
    return tuple(-wi / w[0] for wi in w[1:])


def init_w(f: Polynomial, w) -> Polynomial:
    """Sum of the terms of maximal weighted degree."""
    if f.is_zero():
        raise ValueError("initial form of zero")
    w = weight(w)
    degs = {m: deg_w(Term(c, m), w, f.ring.field) for c, m in f.terms}
    top = max(degs.values())
    return f.restrict(m for m, d in degs.items() if d == top)


def _check(F):
    F = [f for f in F if not f.is_zero()]
    if not F:
        raise ValueError("empty generating set")
    same_ring(F)
    for f in F:
        if not f.is_homogeneous():
            raise NotHomogeneous(f"fan computations need homogeneous input: {f}")
    return F


def _basis_at(F, w, tie):
    return reduced_gb(F, TateOrder(compatible_radii(w), tie)).generators


def initial_ideal_gens(F: Sequence[Polynomial], w, tie: str = "grevlex") -> list:
    F = _check(F)
    return [init_w(g, w) for g in _basis_at(F, w, tie)]


def _primitive(v, signed: bool) -> tuple:
    v = [Fraction(x) for x in v]
    if not any(v):
        return tuple(v)
    den = math.lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = math.gcd(*ints)
    ints = [i // g for i in ints]
    if signed:
        first = next(i for i in ints if i)
        if first < 0:
            ints = [-i for i in ints]
    return tuple(Fraction(i) for i in ints)


def _rank(vectors) -> int:
    rows = [list(v) for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


@dataclass
class GroebnerCone:
    equalities: tuple
    inequalities: tuple
    sample: tuple
    basis: tuple
    initial_forms: tuple
    monomial_free: bool | None = None

    @property
    def ambient_dim(self) -> int:
        return len(self.sample)

    @property
    def dim(self) -> int:
        if not self.equalities:
            return self.ambient_dim
        return self.ambient_dim - _rank(self.equalities)

    @property
    def key(self):
        return tuple(sorted(self.initial_forms, key=str))

    @property
    def is_maximal(self) -> bool:
        return all(f.is_monomial() for f in self.initial_forms)

    def contains(self, w) -> bool:
        """Membership in the relatively open cone."""
        return all(dot(v, w) == 0 for v in self.equalities) and all(
            dot(v, w) > 0 for v in self.inequalities
        )

    def contains_closure(self, w) -> bool:
        return all(dot(v, w) == 0 for v in self.equalities) and all(
            dot(v, w) >= 0 for v in self.inequalities if not _is_domain(v)
        )

    def constraints(self):
        return [lp.eq(v) for v in self.equalities] + [lp.gt(v) for v in self.inequalities]


def _domain_vector(n1: int) -> tuple:
    return (Fraction(-1),) + (Fraction(0),) * (n1 - 1)


def _is_domain(v) -> bool:
    return v[0] < 0 and not any(v[1:])


def cone_of(F: Sequence[Polynomial], w, tie: str = "grevlex") -> GroebnerCone:
    """The relatively open Gröbner cone of the weight w."""
    F = _check(F)
    w = weight(w)
    p = F[0].ring.field.p
    G = _basis_at(F, w, tie)
    eqs, ineqs = [], []
    forms = []
    for g in G:
        pts = {m: lift(Term(c, m), p) for c, m in g.terms}
        degs = {m: dot(w, q) for m, q in pts.items()}
        top = max(degs.values())
        S = [m for m in degs if degs[m] == top]
        rest = [m for m in degs if degs[m] != top]
        forms.append(g.restrict(S))
        base = pts[S[0]]
        for m in S[1:]:
            eqs.append(_primitive([a - b for a, b in zip(pts[m], base)], True))
        for m in rest:
            ineqs.append(_primitive([a - b for a, b in zip(base, pts[m])], False))
    ineqs.append(_domain_vector(len(w)))
    eqs = tuple(sorted(set(v for v in eqs if any(v))))
    ineqs = tuple(sorted(set(ineqs)))
    return GroebnerCone(eqs, ineqs, w, tuple(G), tuple(forms))


def _relint_point(constraints, n1):
    return lp.lp_feasible(constraints, n1)


def facets(cone: GroebnerCone):
    """(inequality normal, relative-interior point) for each proper facet.

    The boundary w0 = 0 of the weight domain is not a facet.
    """
    n1 = cone.ambient_dim
    out = []
    for k, v in enumerate(cone.inequalities):
        if _is_domain(v):
            continue
        cons = [lp.eq(e) for e in cone.equalities] + [lp.eq(v)]
        cons += [lp.gt(u) for j, u in enumerate(cone.inequalities) if j != k]
        pt = _relint_point(cons, n1)
        if pt is not None:
            out.append((v, pt))
    return out


def _maximal_cone_at(F, w, tie):
    """The maximal cone of the term order <_{w,tie}, sampled in its interior."""
    G = _basis_at(F, w, tie)
    o = TateOrder(compatible_radii(w), tie)
    p = F[0].ring.field.p
    cons = [lp.gt(_domain_vector(len(w)))]
    for g in G:
        lead = lift(leading_term(g, o), p)
        for t in g.terms:
            q = lift(t, p)
            if q != lead:
                cons.append(lp.gt(tuple(a - b for a, b in zip(lead, q))))
    pt = lp.lp_feasible(cons, len(w))
    if pt is None:
        raise RuntimeError(f"no interior weight for the term order at {w}")
    cone = cone_of(F, pt, tie)
    if not cone.is_maximal:
        raise RuntimeError(f"interior weight {pt} gave a non-maximal cone")
    return cone


def _neighbor(F, cone, normal, wf, tie):
    delta = Fraction(1)
    for _ in range(200):
        wn = tuple(a - delta * b for a, b in zip(wf, normal))
        if wn[0] < 0:
            other = _maximal_cone_at(F, wn, tie)
            if other.key != cone.key and other.contains_closure(wf):
                return other
        delta /= 2
    raise RuntimeError("facet flip did not find a neighboring cone")


def groebner_fan(F: Sequence[Polynomial], tie: str = "grevlex", seed: int | None = None,
                 start=None) -> list:
    """All maximal cones, by breadth-first facet flipping.

    ``seed`` randomizes the traversal order (the result is the same set).
    """
    F = _check(F)
    n1 = F[0].ring.nvars + 1
    rng = random.Random(seed) if seed is not None else None
    w0 = weight(start) if start is not None else (Fraction(-1),) + (Fraction(0),) * (n1 - 1)
    first = _maximal_cone_at(F, w0, tie)
    found = {first.key: first}
    queue = deque([first])
    while queue:
        if rng is not None:
            i = rng.randrange(len(queue))
            queue.rotate(-i)
        cone = queue.popleft()
        fs = facets(cone)
        if rng is not None:
            rng.shuffle(fs)
        for normal, wf in fs:
            other = _neighbor(F, cone, normal, wf, tie)
            if other.key not in found:
                found[other.key] = other
                queue.append(other)
    return sorted(found.values(), key=lambda c: [str(f) for f in c.key])


@dataclass
class TropicalFan:
    cones: list  # monomial-free cones
    all_cones: list = field(default_factory=list)

    def locate(self, w):
        """The fan cone whose relative interior holds w."""
        hits = [c for c in self.all_cones if c.contains(w)]
        if len(hits) != 1:
            raise RuntimeError(f"weight {w} lies in {len(hits)} cones")
        return hits[0]

    def contains(self, w) -> bool:
        return bool(self.locate(w).monomial_free)


def all_cones(F: Sequence[Polynomial], tie: str = "grevlex", seed: int | None = None) -> list:
    """Every cone of the fan: maximal cones and all their faces."""
    F = _check(F)
    maximal = groebner_fan(F, tie, seed)
    found = {c.key: c for c in maximal}
    queue = deque(maximal)
    while queue:
        cone = queue.popleft()
        for _normal, wf in facets(cone):
            face = cone_of(F, wf, tie)
            if face.key not in found:
                found[face.key] = face
                queue.append(face)
    return sorted(found.values(), key=lambda c: (-c.dim, [str(f) for f in c.key]))


def _monomial_free(cone: GroebnerCone) -> bool:
    if any(f.is_monomial() for f in cone.initial_forms):
        return False
    return not contains_monomial(cone.initial_forms)


def tropical_variety(F: Sequence[Polynomial], tie: str = "grevlex", seed: int | None = None,
                     jobs: int = 1) -> TropicalFan:
    cones = all_cones(F, tie, seed)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as ex:
            flags = list(ex.map(_monomial_free, cones))
    else:
        flags = [_monomial_free(c) for c in cones]
    for c, flag in zip(cones, flags):
        c.monomial_free = flag
    return TropicalFan([c for c in cones if c.monomial_free], cones)

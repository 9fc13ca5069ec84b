"""Gröbner bases for the valuation-first term orders.

Homogeneous ideals are handled one degree at a time.  The degree-d part
of the ideal is a finite-dimensional space spanned by monomial multiples
of the generators; echelonizing it with pivots chosen as leading terms
yields exactly the leading monomials of that slice.  Plain division would
not do: reducing by a term order that compares valuations first can
cycle forever through p-multiples of the same monomials.

Non-homogeneous ideals go through homogenization, a homogeneous basis
for the order with the extra variable's log-radius set to 0, and
dehomogenization.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .order import TateOrder, homogenized_order, leading_term, radii
from .poly import (
    Polynomial,
    Ring,
    Term,
    dehomogenize,
    homogenize,
    mono_divides,
    mono_div,
    mono_gcd,
    mono_lcm,
    monomials_of_degree,
    same_ring,
)


class NotHomogeneous(ValueError):
    pass


@dataclass(frozen=True)
class GBasis:
    generators: tuple
    order: TateOrder
    reduced: bool = False
    # set when some S-pairs were discarded only because their remainder
    # converged to zero up to a valuation cap
    conditional: bool = False
    meta: dict = field(default_factory=dict, compare=False)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def leading_terms(self):
        return [leading_term(g, self.order) for g in self.generators]

    def leading_monomials(self):
        return [t.monomial for t in self.leading_terms()]


class Echelon:
    """Incremental fully reduced row echelon form with leading-term pivots.

    Every stored row is monic at its pivot, its pivot is its leading term
    under ``order``, and it vanishes at every other pivot.  Under these
    invariants the pivots are the leading monomials of the spanned space.
    """

    def __init__(self, order: TateOrder, p: int):
        self.order = order
        self.p = p
        self.rows: dict = {}  # pivot monomial -> {monomial: coeff}
        self._key = order.keyfunc(p)

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        for m in [m for m in row if m in self.rows]:
            c = row.get(m)
            if not c:
                continue
            for k, v in self.rows[m].items():
                s = row.get(k, 0) - c * v
                if s:
                    row[k] = s
                else:
                    row.pop(k, None)
        return row

    def add(self, row: dict):
        """Insert a vector; returns the new pivot, or None if it was dependent."""
        row = self.reduce(row)
        if not row:
            return None
        piv = max((Term(c, m) for m, c in row.items()), key=self._key).monomial
        inv = 1 / row[piv]
        row = {m: c * inv for m, c in row.items()}
        for other in self.rows.values():
            c = other.get(piv)
            if c:
                for k, v in row.items():
                    s = other.get(k, 0) - c * v
                    if s:
                        other[k] = s
                    else:
                        other.pop(k, None)
        self.rows[piv] = row
        return piv

    def pivots(self):
        return set(self.rows)

    def polys(self, ring: Ring):
        return [Polynomial._raw(ring, dict(self.rows[m])) for m in self.rows]


def reduce_degree_slice(rows: Sequence[Polynomial], o: TateOrder) -> list:
    """Echelonize homogeneous polynomials of one degree; pivots are leading terms."""
    rows = [f for f in rows if not f.is_zero()]
    if not rows:
        return []
    ring = same_ring(rows)
    if len({f.total_degree() for f in rows}) > 1 or not all(f.is_homogeneous() for f in rows):
        raise NotHomogeneous("degree slice rows must be homogeneous of one degree")
    ech = Echelon(o, ring.field.p)
    for f in rows:
        ech.add(f.as_dict())
    return ech.polys(ring)


def spoly(f: Polynomial, g: Polynomial, o: TateOrder) -> Polynomial:
    """(LT(g)/D) f - (LT(f)/D) g with D the monomial gcd of the leading terms."""
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of zero")
    if f.ring != g.ring:
        raise ValueError("ring mismatch")
    cf, mf = leading_term(f, o)
    cg, mg = leading_term(g, o)
    d = mono_gcd(mf, mg)
    return f.mul_term(cg, mono_div(mg, d)) - g.mul_term(cf, mono_div(mf, d))


def _check_homogeneous(F):
    for f in F:
        if not f.is_homogeneous():
            raise NotHomogeneous(f"not homogeneous: {f}")


def _dedupe(F):
    out = []
    seen = set()
    for f in F:
        if f.is_zero() or f in seen:
            continue
        seen.add(f)
        out.append(f)
    return out


class _HomogeneousEngine:
    """Degree-by-degree computation of a homogeneous Gröbner basis."""

    def __init__(self, F: Sequence[Polynomial], o: TateOrder):
        F = _dedupe(F)
        _check_homogeneous(F)
        self.ring = same_ring(F) if F else None
        if self.ring is not None:
            o.check(self.ring)
        self.order = o
        self.gens = list(F)
        self.basis = list(F)
        self.lms = [leading_term(g, o).monomial for g in self.basis]
        self.slices: dict = {}  # degree -> Echelon of the degree slice of the ideal

    def slice(self, d: int) -> Echelon:
        if d not in self.slices:
            ech = Echelon(self.order, self.ring.field.p)
            n = self.ring.nvars
            for g in self.gens:
                e = d - g.total_degree()
                if e < 0:
                    continue
                for mu in monomials_of_degree(n, e):
                    ech.add(g.mul_term(1, mu).as_dict())
            self.slices[d] = ech
        return self.slices[d]

    def _bound(self) -> int:
        degs = [sum(m) for m in self.lms]
        best = max(degs)
        for a, b in itertools.combinations(self.lms, 2):
            best = max(best, sum(mono_lcm(a, b)))
        return best

    def run(self):
        if not self.basis:
            return self
        d = min(g.total_degree() for g in self.basis)
        while d <= self._bound():
            ech = self.slice(d)
            for piv in sorted(ech.pivots()):
                if not any(mono_divides(m, piv) for m in self.lms):
                    self.basis.append(Polynomial._raw(self.ring, dict(ech.rows[piv])))
                    self.lms.append(piv)
            d += 1
        return self

    def minimal_lms(self):
        lms = sorted(set(self.lms), key=lambda m: (sum(m), m))
        out = []
        for m in lms:
            if not any(mono_divides(k, m) for k in out):
                out.append(m)
        return out


def buchberger_homogeneous(F: Sequence[Polynomial], o: TateOrder) -> GBasis:
    """A Gröbner basis of the homogeneous ideal <F> for the order o."""
    eng = _HomogeneousEngine(F, o).run()
    return GBasis(tuple(eng.basis), o)


def reduced_gb(F: Sequence[Polynomial], o: TateOrder) -> GBasis:
    """The reduced Gröbner basis of the homogeneous ideal <F>.

    Each element is the echelon row of its degree slice whose pivot is a
    minimal generator of the leading monomial ideal; being fully reduced,
    its other monomials are non-pivots, hence outside the leading ideal.
    """
    eng = _HomogeneousEngine(F, o).run()
    if eng.ring is None:
        return GBasis((), o, reduced=True)
    gens = []
    for m in eng.minimal_lms():
        ech = eng.slice(sum(m))
        gens.append(Polynomial._raw(eng.ring, dict(ech.rows[m])))
    gens.sort(key=lambda g: (g.total_degree(), str(g)))
    return GBasis(tuple(gens), o, reduced=True)


def local_gb(
    F: Sequence[Polynomial], r, tie: str = "grevlex", homogenized: bool = False
) -> GBasis:
    """A polynomial Gröbner basis of the completion of <F> at log-radii r.

    Homogeneous input is handled directly (with ``homogenized`` selecting
    the degree-refined order whose last variable is the homogenizer);
    otherwise via homogenize / basis / dehomogenize.  Dehomogenized output
    is not interreduced.
    """
    F = _dedupe(F)
    r = radii(r)
    if not F:
        raise ValueError("local_gb of an empty family")
    ring = same_ring(F)
    o = TateOrder(r, tie, homogenized)
    o.check(ring)
    if all(f.is_homogeneous() for f in F):
        return reduced_gb(F, o)
    if homogenized:
        raise NotHomogeneous("homogenized order needs homogeneous input")
    hring = ring.extended()
    Fh = [homogenize(f, hring) for f in F]
    H = buchberger_homogeneous(Fh, homogenized_order(r, tie))
    gens = _dedupe(dehomogenize(h, ring) for h in H.generators)
    return GBasis(tuple(gens), TateOrder(r, tie), meta={"homogenized_basis": H.generators})


def minimalize(G: GBasis) -> GBasis:
    """Drop elements whose leading monomial is divisible by another's."""
    lms = G.leading_monomials()
    keep = []
    for i, (g, m) in enumerate(zip(G.generators, lms)):
        dominated = False
        for j, k in enumerate(lms):
            if j == i:
                continue
            if mono_divides(k, m) and (k != m or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(g)
    return GBasis(tuple(keep), G.order, G.reduced, G.conditional, dict(G.meta))


def is_local_gb(
    G: Sequence[Polynomial],
    F: Sequence[Polynomial],
    r,
    tie: str = "grevlex",
    homogenized: bool = False,
) -> bool:
    """True iff every leading monomial of a reference basis of <F> at r is covered by G."""
    G = [g for g in G if not g.is_zero()]
    H = local_gb(F, r, tie, homogenized)
    o = TateOrder(radii(r), tie, homogenized)
    lg = [leading_term(g, o).monomial for g in G]
    for h in H.generators:
        m = leading_term(h, o).monomial
        if not any(mono_divides(k, m) for k in lg):
            return False
    return True

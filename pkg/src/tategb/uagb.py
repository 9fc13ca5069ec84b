"""Universal analytic Gröbner bases.

``test_uagb`` checks a generating set against one representative order
per vertex of the Minkowski sum of its Newton polytopes; ``uagb`` grows
the homogenized generators by reduced bases at failing orders until the
test passes, then dehomogenizes.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .gb import is_local_gb, reduced_gb
from .order import TateOrder, lt_set
from .poly import Polynomial, dehomogenize, homogenize, same_ring
from .polytope import minkowski_vertices

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class UAGBReport:
    verdict: bool
    witness: tuple | None
    vertex_count: int
    directions: list = field(default_factory=list)  # (vertex, radii, passed) per vertex tested

    def __bool__(self):
        return self.verdict


def _normalize_trailing(r):
    # shift along (1,...,1) so the homogenizing variable gets log-radius 0;
    # on homogeneous data this changes no comparison within a degree
    c = r[-1]
    return tuple(x - c for x in r)


def _check_vertex(args):
    F, r, tie, homogenized = args
    return is_local_gb(F, F, r, tie, homogenized)


def test_uagb(
    F: Sequence[Polynomial],
    field=None,
    tie: str = "grevlex",
    homogenized: bool = False,
    jobs: int = 1,
) -> UAGBReport:
    """Decide whether F is a local Gröbner basis of <F> at every log-radius.

    Vertices are visited in decreasing lexicographic order; the first
    failing one is returned as witness.
    """
    F = list(F)
    if any(f.is_zero() for f in F):
        raise ValueError("test_uagb: zero generator")
    same_ring(F)
    certs = sorted(minkowski_vertices(F, field), key=lambda c: c.vertex, reverse=True)
    jobs_args = [(F, c.radii, tie, homogenized) for c in certs]
    if jobs > 1 and len(certs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_check_vertex, jobs_args))
    else:
        results = []
        for a in jobs_args:
            results.append(_check_vertex(a))
            if not results[-1]:
                break
    directions = []
    for c, ok in zip(certs, results):
        directions.append((c.vertex, c.radii, ok))
        if not ok:
            w = _normalize_trailing(c.radii) if homogenized else c.radii
            return UAGBReport(False, w, len(certs), directions)
    return UAGBReport(True, None, len(certs), directions)


def _proportional(f: Polynomial, g: Polynomial) -> bool:
    if len(f) != len(g) or f.monomials() != g.monomials():
        return False
    ratio = f.terms[0].coeff / g.terms[0].coeff
    return all(a.coeff == ratio * b.coeff for a, b in zip(f.terms, g.terms))


def _add_new(G: list, H) -> list:
    new = []
    for h in H:
        if not any(_proportional(h, g) for g in G + new):
            new.append(h)
    return new


@dataclass
class UAGBRun:
    basis: list
    homogeneous_basis: list
    iterations: int
    witnesses: list


def uagb_run(F: Sequence[Polynomial], field=None, tie: str = "grevlex", jobs: int = 1,
             max_iterations: int = 1000) -> UAGBRun:
    F = [f for f in F if not f.is_zero()]
    if not F:
        raise ValueError("uagb of an empty family")
    ring = same_ring(F)
    if all(f.is_homogeneous() for f in F):
        G, hom, hring = list(F), False, ring
    else:
        hring = ring.extended()
        G, hom = [homogenize(f, hring) for f in F], True
    G = _add_new([], G)
    witnesses = []
    it = 0
    while True:
        rep = test_uagb(G, field, tie, hom, jobs)
        if rep.verdict:
            break
        it += 1
        if it > max_iterations:
            raise RuntimeError("UAGB loop exceeded its iteration guard")
        witnesses.append(rep.witness)
        H = reduced_gb(G, TateOrder(rep.witness, tie, hom))
        new = _add_new(G, H.generators)
        if not new:
            raise RuntimeError(f"reduced basis at {rep.witness} adds nothing; test is inconsistent")
        log.debug("iteration %d at %s adds %s", it, rep.witness, [str(h) for h in new])
        G.extend(new)
    out = [dehomogenize(g, ring) for g in G] if hom else list(G)
    return UAGBRun(_add_new([], out), G, it, witnesses)


def uagb(F: Sequence[Polynomial], field=None, tie: str = "grevlex", jobs: int = 1) -> list:
    """A universal analytic Gröbner basis of <F> (not minimal, not canonical)."""
    return uagb_run(F, field, tie, jobs).basis


def term_order_classes(F: Sequence[Polynomial], field=None) -> list:
    """One log-radii representative per equivalence class of term orders w.r.t. F."""
    return [c.radii for c in minkowski_vertices(F, field)]


def class_signature(F: Sequence[Polynomial], r, tie: str = "grevlex", homogenized: bool = False):
    return lt_set(F, TateOrder(r, tie, homogenized))

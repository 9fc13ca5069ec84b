from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tategb import lp
from tategb.order import TateOrder, leading_term
from tategb.polytope import certificate_is_valid, minkowski_vertices, newton_polytope

from helpers import P, R1, R2, R2h, R3, brute_force_cones, polynomials


def test_lp_feasible_examples():
    x = lp.lp_feasible([lp.ge((1,), 0), lp.le((1,), 1)], 1)
    assert 0 <= x[0] <= 1
    assert lp.lp_feasible([lp.ge((1,), 1), lp.le((1,), 0)], 1) is None
    # u1 < 1 + u2
    u = lp.lp_feasible([lp.gt((-1, 1), -1)], 2)
    assert u[0] < 1 + u[1]


def test_newton_polytope_examples():
    assert set(newton_polytope(P("x - 7*y", R2)).points) == {(0, 1, 0), (1, 0, 1)}
    assert newton_polytope(R2.var("x")).points == ((0, 1, 0),)
    assert set(newton_polytope(P("y - 7*y^2", R2)).points) == {(0, 0, 1), (1, 0, 2)}
    with pytest.raises(ValueError):
        newton_polytope(R2.zero())


def test_minkowski_examples():
    vs = minkowski_vertices([P("x - 7*y", R2)])
    assert [c.vertex for c in vs] == [(0, 1, 0), (1, 0, 1)]
    assert len(minkowski_vertices([R2.var("x")])) == 1
    F = [P("x - 7*y", R2h), P("y*t - 7*y^2", R2h)]
    assert len(minkowski_vertices(F)) == len(brute_force_cones(F)) == 4


def test_certificate_radii_select_terms():
    F = [P("x - 7*y", R2h), P("y*t - 7*y^2", R2h)]
    for c in minkowski_vertices(F):
        o = TateOrder(c.radii)
        assert tuple(leading_term(f, o) for f in F) == c.terms


systems = st.integers(1, 3).flatmap(
    lambda n: st.lists(polynomials([R1, R2, R3][n - 1], max_terms=4, max_deg=3), min_size=1, max_size=3)
)


@settings(max_examples=40, deadline=None)
@given(systems)
def test_vertices_match_brute_force(F):
    certs = minkowski_vertices(F)
    hits = brute_force_cones(F)
    assert sorted(c.selection for c in certs) == sorted(hits)
    assert len({c.vertex for c in certs}) == len(certs)
    sigs = set()
    for c in certs:
        assert certificate_is_valid(c, F)
        o = TateOrder(c.radii)
        sig = tuple(leading_term(f, o) for f in F)
        assert sig == c.terms
        sigs.add(sig)
    assert len(sigs) == len(certs)

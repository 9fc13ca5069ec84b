"""The exact simplex against independent oracles: exact vertex
enumeration on bounded problems, scipy's HiGHS for status on the rest."""
import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linprog

from tategb import lp

small = st.integers(-4, 4)


def _solve_square(A, b):
    """Exact Gaussian elimination; None if singular."""
    n = len(A)
    M = [list(map(Fraction, row)) + [Fraction(v)] for row, v in zip(A, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            return None
        M[c], M[piv] = M[piv], M[c]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c] / M[c][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return tuple(M[i][n] / M[i][i] for i in range(n))


def _vertex_oracle(n, cons, obj):
    """Optimum of a bounded LP by enumerating basic feasible points."""
    best = None
    for sub in itertools.combinations(cons, n):
        x = _solve_square([c.coeffs for c in sub], [c.rhs for c in sub])
        if x is None or not all(c.holds(x) for c in cons):
            continue
        v = sum(a * b for a, b in zip(obj, x))
        best = v if best is None else max(best, v)
    return ("infeasible", None) if best is None else ("optimal", best)


def _highs_status(n, cons, obj):
    A_ub, b_ub, A_eq, b_eq = [], [], [], []
    for c in cons:
        row = [float(a) for a in c.coeffs]
        if c.op == "==":
            A_eq.append(row)
            b_eq.append(float(c.rhs))
        elif c.op == "<=":
            A_ub.append(row)
            b_ub.append(float(c.rhs))
        else:
            A_ub.append([-a for a in row])
            b_ub.append(-float(c.rhs))
    res = linprog(
        -np.array(obj, dtype=float),
        A_ub=A_ub or None, b_ub=b_ub or None, A_eq=A_eq or None, b_eq=b_eq or None,
        bounds=[(None, None)] * n, method="highs",
    )
    return {0: "optimal", 2: "infeasible", 3: "unbounded"}[res.status], (-res.fun if res.status == 0 else None)


def _box(n, bound=6):
    out = []
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        out += [lp.le(e, bound), lp.ge(e, -bound)]
    return out


@st.composite
def lps(draw):
    n = draw(st.integers(1, 3))
    m = draw(st.integers(1, 5))
    cons = []
    for _ in range(m):
        coeffs = tuple(draw(small) for _ in range(n))
        op = draw(st.sampled_from([">=", "<=", "=="]))
        cons.append(lp.Constraint(coeffs, op, draw(small)))
    obj = tuple(draw(small) for _ in range(n))
    return n, cons, obj


@settings(max_examples=200, deadline=None)
@given(lps())
def test_simplex_matches_vertex_enumeration(prob):
    n, cons, obj = prob
    cons = cons + _box(n)
    res = lp.solve_lp(n, cons, obj, maximize=True)
    status, val = _vertex_oracle(n, cons, obj)
    assert res.status == status
    if status == "optimal":
        assert res.value == val
        assert all(c.holds(res.x) for c in cons)


@settings(max_examples=200, deadline=None)
@given(lps())
def test_simplex_status_matches_highs(prob):
    n, cons, obj = prob
    res = lp.solve_lp(n, cons, obj, maximize=True)
    status, val = _highs_status(n, cons, obj)
    assert res.status == status
    if status == "optimal":
        assert abs(float(res.value) - val) < 1e-7


@settings(max_examples=100, deadline=None)
@given(lps())
def test_feasible_point_is_exact(prob):
    n, cons, _ = prob
    x = lp.lp_feasible(cons, n)
    status, _ = _highs_status(n, cons, (0,) * n)
    assert (x is not None) == (status != "infeasible")
    if x is not None:
        assert all(isinstance(v, Fraction) for v in x)
        assert all(c.holds(x) for c in cons)


def test_strict_constraints():
    # 0 < x < 1 is feasible, x > 1 and x < 1 is not
    x = lp.lp_feasible([lp.gt((1,), 0), lp.lt((1,), 1)], 1)
    assert 0 < x[0] < 1
    assert lp.lp_feasible([lp.gt((1,), 1), lp.lt((1,), 1)], 1) is None
    assert lp.lp_feasible([lp.gt((1, -1)), lp.gt((-1, 1))], 2) is None


def test_degenerate_redundant_equalities():
    cons = [lp.eq((1, 1), 2), lp.eq((2, 2), 4), lp.ge((1, 0), 0), lp.ge((0, 1), 0)]
    res = lp.solve_lp(2, cons, (1, 0), True)
    assert res.status == "optimal" and res.value == 2


def test_unbounded_raises_in_feasible():
    with pytest.raises(lp.LPUnbounded):
        lp.lp_feasible(lp.LPProblem(1, [lp.ge((1,), 0)], (1,), True))

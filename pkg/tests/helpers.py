"""Shared rings and hypothesis strategies."""
from fractions import Fraction

from hypothesis import strategies as st

from tategb.arith import ValuedField
from tategb.poly import Polynomial, Ring

Q7 = ValuedField(7)
R1 = Ring(("x",), Q7)
R2 = Ring(("x", "y"), Q7)
R3 = Ring(("x", "y", "z"), Q7)
R2h = Ring(("x", "y", "t"), Q7)


def ring(names, p=7):
    return Ring(tuple(names), ValuedField(p))


def P(src, R):
    from tategb.io import parse_polynomial

    return parse_polynomial(src, R)


rationals = st.fractions(max_denominator=50).filter(lambda c: abs(c.numerator) < 10**6)
nonzero_rationals = rationals.filter(lambda c: c != 0)


@st.composite
def coeffs_with_val(draw, p=7, lo=0, hi=3):
    """Nonzero rational of p-adic valuation in [lo, hi] times a small unit."""
    v = draw(st.integers(lo, hi))
    num = draw(st.integers(1, 12).filter(lambda k: k % p))
    den = draw(st.integers(1, 6).filter(lambda k: k % p))
    sign = draw(st.sampled_from([1, -1]))
    return sign * Fraction(num, den) * Fraction(p) ** v


@st.composite
def polynomials(draw, R, max_terms=4, max_deg=3, lo=0, hi=3, nonzero=True):
    n = R.nvars
    mono = st.tuples(*[st.integers(0, max_deg)] * n).filter(lambda m: sum(m) <= max_deg)
    monos = draw(st.lists(mono, min_size=1 if nonzero else 0, max_size=max_terms, unique=True))
    return Polynomial(R, {m: draw(coeffs_with_val(R.field.p, lo, hi)) for m in monos})


@st.composite
def homogeneous_polynomials(draw, R, max_terms=5, max_deg=4, lo=0, hi=3):
    d = draw(st.integers(0, max_deg))
    from tategb.poly import monomials_of_degree

    pool = list(monomials_of_degree(R.nvars, d))
    monos = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=max_terms, unique=True))
    return Polynomial(R, {m: draw(coeffs_with_val(R.field.p, lo, hi)) for m in monos})


def radii_vectors(n, bound=5, den=4):
    return st.tuples(*[st.fractions(min_value=-bound, max_value=bound, max_denominator=den)] * n)


def strictly_feasible_highs(rows, rhs):
    """Is {u : rows[k].u > rhs[k] for all k} nonempty?  Floating-point
    oracle (HiGHS), independent of the exact simplex under test."""
    import numpy as np
    from scipy.optimize import linprog

    if not rows:
        return True
    n = len(rows[0])
    # maximize d subject to rows.u - d >= rhs, d <= 1
    A = [[-float(a) for a in row] + [1.0] for row in rows]
    b = [-float(c) for c in rhs]
    res = linprog(
        np.r_[np.zeros(n), -1.0], A_ub=A, b_ub=b,
        bounds=[(None, None)] * n + [(None, 1.0)], method="highs",
    )
    return res.status == 0 and -res.fun > 1e-9


def brute_force_cones(F):
    """Index vectors j whose open cone C_j is nonempty, over the full product."""
    import itertools

    from tategb.polytope import newton_polytope

    polys = [newton_polytope(f) for f in F]
    hits = []
    for sel in itertools.product(*(range(len(Pn.points)) for Pn in polys)):
        rows, rhs = [], []
        for Pn, j in zip(polys, sel):
            a = Pn.points[j]
            for k, b in enumerate(Pn.points):
                if k != j:
                    rows.append([bi - ai for ai, bi in zip(a[1:], b[1:])])
                    rhs.append(a[0] - b[0])
        if strictly_feasible_highs(rows, rhs):
            hits.append(sel)
    return hits


def interior_samples(cone, k, rng):
    """k exact points of the relatively open cone, perturbing its sample
    inside the span cut out by the equalities."""
    import sympy

    n1 = cone.ambient_dim
    if cone.equalities:
        M = sympy.Matrix([[sympy.Rational(a.numerator, a.denominator) for a in v] for v in cone.equalities])
        basis = [[Fraction(int(x.p), int(x.q)) for x in b] for b in M.nullspace()]
    else:
        basis = [[Fraction(int(i == j)) for j in range(n1)] for i in range(n1)]
    out = []
    while len(out) < k:
        d = [Fraction(0)] * n1
        for b in basis:
            c = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            d = [x + c * y for x, y in zip(d, b)]
        step = Fraction(1)
        for _ in range(60):
            w = tuple(a + step * b for a, b in zip(cone.sample, d))
            if cone.contains(w):
                out.append(w)
                break
            step /= 3
    return out


def random_poly(rng, R, k, max_deg=3, max_val=2):
    d = {}
    for _ in range(k):
        m = tuple(rng.randint(0, max_deg) for _ in range(R.nvars))
        d[m] = Fraction(rng.choice([1, -1, 2, 3, -5, Fraction(1, 2)])) * Fraction(R.field.p) ** rng.randint(0, max_val)
    return Polynomial(R, d)


def random_domain(rng, n, two=False):
    from tategb.polyhedral import PolyhedralDomain

    s1 = tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n))
    if not two or n < 2:
        return PolyhedralDomain([s1])
    a, b = Fraction(rng.randint(1, 6), rng.randint(1, 3)), Fraction(rng.randint(1, 6), rng.randint(1, 3))
    s2 = (s1[0] + a, s1[1] - b) + s1[2:]
    return PolyhedralDomain([s1, s2])


def sample_in_domain(rng, Pd):
    """Random convex combination of the vertices minus a strictly positive offset."""
    lam = [Fraction(rng.randint(1, 10)) for _ in Pd.vertices]
    tot = sum(lam)
    lam = [x / tot for x in lam]
    base = [sum(l * s[k] for l, s in zip(lam, Pd.vertices)) for k in range(Pd.dim)]
    return tuple(b - Fraction(rng.randint(1, 30), rng.randint(1, 10)) for b in base)

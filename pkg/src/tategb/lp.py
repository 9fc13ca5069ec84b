"""Exact rational linear programming.

Dense two-phase tableau simplex with Bland's rule over Fractions.  All
variables are free; strict inequalities are handled by maximizing a
bounded slack ``delta`` and checking it is positive.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

OPS = (">=", "<=", "==", ">", "<")


class LPUnbounded(Exception):
    """The objective is unbounded on the feasible region."""


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple
    op: str
    rhs: Fraction = Fraction(0)

    def __post_init__(self):
        if self.op not in OPS:
            raise ValueError(f"unknown constraint operator {self.op!r}")
        object.__setattr__(self, "coeffs", tuple(Fraction(a) for a in self.coeffs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))

    @property
    def strict(self) -> bool:
        return self.op in (">", "<")

    def holds(self, x: Sequence) -> bool:
        lhs = sum((a * xi for a, xi in zip(self.coeffs, x)), Fraction(0))
        return {
            ">=": lhs >= self.rhs,
            "<=": lhs <= self.rhs,
            "==": lhs == self.rhs,
            ">": lhs > self.rhs,
            "<": lhs < self.rhs,
        }[self.op]


def ge(coeffs, rhs=0) -> Constraint:
    return Constraint(tuple(coeffs), ">=", rhs)


def le(coeffs, rhs=0) -> Constraint:
    return Constraint(tuple(coeffs), "<=", rhs)


def gt(coeffs, rhs=0) -> Constraint:
    return Constraint(tuple(coeffs), ">", rhs)


def lt(coeffs, rhs=0) -> Constraint:
    return Constraint(tuple(coeffs), "<", rhs)


def eq(coeffs, rhs=0) -> Constraint:
    return Constraint(tuple(coeffs), "==", rhs)


@dataclass
class LPProblem:
    nvars: int
    constraints: list = field(default_factory=list)
    objective: tuple | None = None
    maximize: bool = True


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: tuple | None = None
    value: Fraction | None = None


def _pivot(T, basis, r, c):
    row = T[r]
    pv = row[c]
    if pv != 1:
        row[:] = [v / pv for v in row]
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                other[:] = [a - f * b for a, b in zip(other, row)]
    basis[r] = c


def _simplex(T, basis, cost, allowed):
    """Maximize ``cost . x`` on tableau T (last column is rhs), Bland's rule."""
    ncols = len(cost)
    while True:
        enter = None
        for j in range(ncols):
            if not allowed[j] or j in basis:
                continue
            red = cost[j] - sum(cost[b] * T[i][j] for i, b in enumerate(basis))
            if red > 0:
                enter = j
                break
        if enter is None:
            return "optimal"
        best = None
        for i, row in enumerate(T):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return "unbounded"
        _pivot(T, basis, best[1], enter)


def solve_lp(
    nvars: int,
    constraints: Sequence[Constraint],
    objective: Sequence | None = None,
    maximize: bool = True,
) -> LPResult:
    """Optimize over free variables subject to non-strict constraints."""
    rows = []  # (coeffs, sense, rhs) with sense in "<=", "=="
    for con in constraints:
        if con.strict:
            raise ValueError("solve_lp takes non-strict constraints; use lp_feasible")
        if len(con.coeffs) != nvars:
            raise ValueError("constraint dimension mismatch")
        if con.op == ">=":
            rows.append(([-a for a in con.coeffs], "<=", -con.rhs))
        else:
            rows.append((list(con.coeffs), con.op, con.rhs))

    n_ub = sum(1 for _, s, _ in rows if s == "<=")
    m = len(rows)
    # columns: x+ (nvars), x- (nvars), slacks (n_ub), artificials (m)
    ncols = 2 * nvars + n_ub + m
    art0 = 2 * nvars + n_ub
    T = []
    basis = []
    k = 0
    for i, (a, sense, b) in enumerate(rows):
        row = [Fraction(0)] * (ncols + 1)
        for j, v in enumerate(a):
            row[j] = Fraction(v)
            row[nvars + j] = -Fraction(v)
        if sense == "<=":
            row[2 * nvars + k] = Fraction(1)
            k += 1
        row[-1] = Fraction(b)
        if row[-1] < 0:
            row = [-v for v in row]
        row[art0 + i] = Fraction(1)
        T.append(row)
        basis.append(art0 + i)

    cost1 = [Fraction(0)] * art0 + [Fraction(-1)] * m
    _simplex(T, basis, cost1, [True] * ncols)
    if any(T[i][-1] != 0 for i, b in enumerate(basis) if b >= art0):
        return LPResult("infeasible")

    # drive remaining artificial variables out of the basis
    i = 0
    while i < len(T):
        if basis[i] >= art0:
            col = next((j for j in range(art0) if T[i][j] != 0), None)
            if col is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, basis, i, col)
        i += 1

    allowed = [j < art0 for j in range(ncols)]
    cost2 = [Fraction(0)] * ncols
    if objective is not None:
        sign = 1 if maximize else -1
        for j, cj in enumerate(objective):
            cost2[j] = sign * Fraction(cj)
            cost2[nvars + j] = -sign * Fraction(cj)
        if _simplex(T, basis, cost2, allowed) == "unbounded":
            return LPResult("unbounded")

    vals = [Fraction(0)] * ncols
    for i, b in enumerate(basis):
        vals[b] = T[i][-1]
    x = tuple(vals[j] - vals[nvars + j] for j in range(nvars))
    value = None
    if objective is not None:
        value = sum((Fraction(c) * xi for c, xi in zip(objective, x)), Fraction(0))
    return LPResult("optimal", x, value)


def lp_feasible(problem_or_constraints, nvars: int | None = None):
    """Return an exact point satisfying every constraint, or None.

    Accepts an :class:`LPProblem` (its objective is then optimized and
    :class:`LPUnbounded` raised if unbounded) or a constraint list.
    """
    if isinstance(problem_or_constraints, LPProblem):
        prob = problem_or_constraints
        cons, nvars = list(prob.constraints), prob.nvars
    else:
        prob = None
        cons = list(problem_or_constraints)
        if nvars is None:
            if not cons:
                raise ValueError("nvars required for an empty constraint list")
            nvars = len(cons[0].coeffs)

    strict = [c for c in cons if c.strict]
    if not strict:
        objective = prob.objective if prob is not None else None
        maximize = prob.maximize if prob is not None else True
        res = solve_lp(nvars, cons, objective, maximize)
        if res.status == "unbounded":
            raise LPUnbounded("objective unbounded")
        return res.x if res.status == "optimal" else None

    # maximize delta subject to a.x >= b + delta on strict rows, delta <= 1
    lifted = []
    for c in cons:
        if c.op == ">":
            lifted.append(ge(c.coeffs + (-1,), c.rhs))
        elif c.op == "<":
            lifted.append(le(c.coeffs + (1,), c.rhs))
        else:
            lifted.append(Constraint(c.coeffs + (0,), c.op, c.rhs))
    lifted.append(le((0,) * nvars + (1,), 1))
    res = solve_lp(nvars + 1, lifted, (0,) * nvars + (1,), True)
    if res.status != "optimal" or res.x[-1] <= 0:
        return None
    point = res.x[:-1]
    if prob is not None and prob.objective is not None:
        raise ValueError("objectives with strict constraints are not supported")
    return point

"""Sparse multivariate polynomials over the rationals.

A polynomial is an immutable map from exponent tuples to nonzero
Fractions.  Terms are kept sorted by descending grevlex on exponents, so
two polynomials are equal exactly when their term sequences are.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .arith import ValuedField, format_rational

Monomial = tuple  # tuple[int, ...]


class Term(NamedTuple):
    coeff: Fraction
    monomial: Monomial

    def __mul__(self, other: "Term") -> "Term":
        return Term(self.coeff * other.coeff, mono_mul(self.monomial, other.monomial))


class RingMismatch(ValueError):
    pass


def grevlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in reversed(m)))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_of_degree(n: int, d: int):
    """All exponent tuples of length n and total degree d."""
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


@dataclass(frozen=True)
class Ring:
    """Ambient polynomial ring: variable names plus the valued coefficient field."""

    variables: tuple
    field: ValuedField

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("a ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        if any(not v for v in self.variables):
            raise ValueError("empty variable name")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: Fraction(c)})

    def monomial(self, exps, coeff=1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): Fraction(coeff)})

    def var(self, name_or_index) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.variables.index(name_or_index)
        e = [0] * self.nvars
        e[i] = 1
        return self.monomial(e)

    def gens(self):
        return tuple(self.var(i) for i in range(self.nvars))

    def homogenizing_name(self) -> str:
        name = "t"
        while name in self.variables:
            name += "_"
        return name

    def extended(self, name: str | None = None) -> "Ring":
        return Ring(self.variables + (name or self.homogenizing_name(),), self.field)

    def dropped_last(self) -> "Ring":
        return Ring(self.variables[:-1], self.field)


class Polynomial:
    __slots__ = ("ring", "_terms", "_dict", "_hash")

    def __init__(self, ring: Ring, coeffs: dict | Iterable = ()):
        self.ring = ring
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        d = {}
        n = ring.nvars
        for m, c in items:
            m = tuple(m)
            if len(m) != n:
                raise ValueError(f"monomial {m} has wrong length for {ring.variables}")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            c = Fraction(c)
            if c:
                d[m] = d.get(m, 0) + c
        d = {m: c for m, c in d.items() if c}
        self._dict = d
        self._terms = tuple(
            Term(d[m], m) for m in sorted(d, key=grevlex_key, reverse=True)
        )
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, d: dict) -> "Polynomial":
        # d must already be free of zero coefficients
        p = cls.__new__(cls)
        p.ring = ring
        p._dict = d
        p._terms = tuple(Term(d[m], m) for m in sorted(d, key=grevlex_key, reverse=True))
        p._hash = None
        return p

    # -- accessors --------------------------------------------------------
    @property
    def terms(self) -> tuple:
        return self._terms

    def as_dict(self) -> dict:
        return dict(self._dict)

    def coeff(self, m: Monomial) -> Fraction:
        return self._dict.get(tuple(m), Fraction(0))

    def monomials(self):
        return [t.monomial for t in self._terms]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._dict)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._dict}) <= 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._dict)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring.variables} vs {other.ring.variables}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = dict(self._dict)
        for m, c in other._dict.items():
            s = d.get(m, 0) + c
            if s:
                d[m] = s
            else:
                d.pop(m, None)
        return Polynomial._raw(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self._dict.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.ring.zero()
            return Polynomial._raw(self.ring, {m: c * other for m, c in self._dict.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = {}
        for m1, c1 in self._dict.items():
            for m2, c2 in other._dict.items():
                m = mono_mul(m1, m2)
                d[m] = d.get(m, 0) + c1 * c2
        return Polynomial._raw(self.ring, {m: c for m, c in d.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = Fraction(c)
        return self * (1 / c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, coeff, m: Monomial) -> "Polynomial":
        coeff = Fraction(coeff)
        if not coeff:
            return self.ring.zero()
        return Polynomial._raw(
            self.ring, {mono_mul(k, m): c * coeff for k, c in self._dict.items()}
        )

    def scaled_monic(self, m: Monomial) -> "Polynomial":
        """Divide by the coefficient of ``m``."""
        return self * (1 / self._dict[m])

    def restrict(self, monos) -> "Polynomial":
        monos = set(monos)
        return Polynomial._raw(self.ring, {m: c for m, c in self._dict.items() if m in monos})

    # -- comparisons ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self._terms))
        return self._hash

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def format_monomial(m: Monomial, names) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    """Canonical text: terms in descending grevlex, e.g. ``x^2 - 7*y*z``."""
    if not f.terms:
        return "0"
    out = []
    for i, (c, m) in enumerate(f.terms):
        neg = c < 0
        a = -c if neg else c
        mono = format_monomial(m, f.ring.variables)
        if not mono:
            body = format_rational(a)
        elif a == 1:
            body = mono
        else:
            body = f"{format_rational(a)}*{mono}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def homogenize(f: Polynomial, ring: Ring | None = None) -> Polynomial:
    """Pad every term with the trailing variable up to the total degree of ``f``."""
    target = ring or f.ring.extended()
    if target.nvars != f.ring.nvars + 1 or target.variables[:-1] != f.ring.variables:
        raise RingMismatch("homogenizing ring must append one variable")
    d = f.total_degree()
    return Polynomial._raw(target, {m + (d - sum(m),): c for m, c in f.as_dict().items()})


def dehomogenize(h: Polynomial, ring: Ring | None = None) -> Polynomial:
    """Set the last variable to 1."""
    target = ring or h.ring.dropped_last()
    return Polynomial(target, [(m[:-1], c) for m, c in h.as_dict().items()])


def same_ring(polys) -> Ring:
    polys = list(polys)
    if not polys:
        raise ValueError("empty polynomial family")
    ring = polys[0].ring
    for f in polys[1:]:
        if f.ring != ring:
            raise RingMismatch(f"{ring.variables} vs {f.ring.variables}")
    return ring

"""Exact rationals and the p-adic valuation on them.

Rationals are :class:`fractions.Fraction`; the valuation of zero is
``math.inf``, which already compares above every Fraction and absorbs
addition.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

INF = math.inf

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*\Z")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class ValuedField:
    """The rationals with the p-adic valuation; the uniformizer is ``p``."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"not a prime: {self.p!r}")

    def val(self, c) -> Fraction | float:
        return val_p(c, self)

    def __str__(self):
        return f"Q_{self.p}"


def _int_val(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def val_p(c, field: ValuedField | int) -> Fraction | float:
    """Exponent of p in ``c``; ``INF`` for zero."""
    p = field.p if isinstance(field, ValuedField) else field
    c = Fraction(c)
    if c == 0:
        return INF
    return Fraction(_int_val(abs(c.numerator), p) - _int_val(c.denominator, p))


def parse_rational(src: str) -> Fraction:
    m = _RATIONAL_RE.match(src)
    if m is None:
        raise ValueError(f"malformed rational: {src!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator: {src!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_value(v) -> str:
    """Like :func:`format_rational` but also accepts the infinite valuation."""
    if v == INF:
        return "inf"
    return format_rational(v)

"""Outward-rounded interval evaluation of expression trees."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import DomainError
from . import elementary
from .expr import (
    Add,
    Div,
    Exp,
    Expr,
    Floor,
    Ln,
    Log2,
    Max,
    Mul,
    Pow,
    Sqrt,
    Sub,
    fold,
    lift,
)

MIN_PRECISION = 16


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, v) -> "Interval":
        v = Fraction(v)
        return cls(v, v)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def intersect(self, other: "Interval") -> "Interval":
        return Interval(max(self.lo, other.lo), min(self.hi, other.hi))

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __str__(self):
        if self.is_point:
            return str(self.lo)
        return f"[{float(self.lo):.17g}, {float(self.hi):.17g}]"


def round_down(q: Fraction, p: int) -> Fraction:
    """Largest dyadic with about p significant bits that is <= q."""
    if q == 0:
        return q
    num, den = q.numerator, q.denominator
    if den == 1 and abs(num).bit_length() <= p:
        return q
    shift = p - (abs(num).bit_length() - den.bit_length())
    if shift >= 0:
        m = (num << shift) // den
        return Fraction(m, 1 << shift)
    m = num // (den << -shift)
    return Fraction(m << -shift)


def round_up(q: Fraction, p: int) -> Fraction:
    return -round_down(-q, p)


def _mk(lo: Fraction, hi: Fraction, p: int) -> Interval:
    return Interval(round_down(lo, p), round_up(hi, p))


def _mul(a: Interval, b: Interval, p: int) -> Interval:
    prods = (a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi)
    return _mk(min(prods), max(prods), p)


def _recip(b: Interval, p: int) -> Interval:
    if b.lo <= 0 <= b.hi:
        certain = b.is_point
        raise DomainError("divisor enclosure contains zero", certain=certain)
    return _mk(1 / b.hi, 1 / b.lo, p)


def _require_positive(a: Interval, what: str, allow_zero: bool = False) -> None:
    bad_lo = a.lo < 0 if allow_zero else a.lo <= 0
    if bad_lo:
        certain = a.hi < 0 if allow_zero else a.hi <= 0
        raise DomainError(f"{what} not certified positive: {a}", certain=certain)


def _ln(a: Interval, p: int) -> Interval:
    _require_positive(a, "logarithm argument")
    w = p + 32
    return _mk(elementary.ln_bounds(a.lo, w)[0], elementary.ln_bounds(a.hi, w)[1], p)


def _exp(a: Interval, p: int) -> Interval:
    w = p + 32
    return _mk(elementary.exp_bounds(a.lo, w)[0], elementary.exp_bounds(a.hi, w)[1], p)


def _int_pow(a: Interval, k: int, p: int) -> Interval:
    if k == 0:
        return Interval.point(1)
    if k < 0:
        return _recip(_int_pow(a, -k, p), p)
    lo, hi = a.lo ** k, a.hi ** k
    if k % 2 == 0:
        if a.lo >= 0:
            return _mk(lo, hi, p)
        if a.hi <= 0:
            return _mk(hi, lo, p)
        return _mk(Fraction(0), max(lo, hi), p)
    return _mk(lo, hi, p)


@functools.lru_cache(maxsize=65536)
def _raw(e: Expr, p: int) -> Interval:
    v = fold(e)
    if v is not None:
        return Interval.point(v)
    if isinstance(e, Add):
        a, b = _raw(e.left, p), _raw(e.right, p)
        return _mk(a.lo + b.lo, a.hi + b.hi, p)
    if isinstance(e, Sub):
        a, b = _raw(e.left, p), _raw(e.right, p)
        return _mk(a.lo - b.hi, a.hi - b.lo, p)
    if isinstance(e, Mul):
        return _mul(_raw(e.left, p), _raw(e.right, p), p)
    if isinstance(e, Div):
        return _mul(_raw(e.left, p), _recip(_raw(e.right, p), p), p)
    if isinstance(e, Pow):
        return _pow(e, p)
    if isinstance(e, Log2):
        l2lo, l2hi = elementary.ln2_bounds(p + 32)
        return _mul(_ln(_raw(e.arg, p), p), _mk(1 / l2hi, 1 / l2lo, p), p)
    if isinstance(e, Ln):
        return _ln(_raw(e.arg, p), p)
    if isinstance(e, Exp):
        return _exp(_raw(e.arg, p), p)
    if isinstance(e, Sqrt):
        a = _raw(e.arg, p)
        _require_positive(a, "sqrt argument", allow_zero=True)
        w = p + 32
        return _mk(elementary.sqrt_bounds(a.lo, w)[0], elementary.sqrt_bounds(a.hi, w)[1], p)
    if isinstance(e, Floor):
        a = _raw(e.arg, p)
        return Interval(Fraction(math.floor(a.lo)), Fraction(math.floor(a.hi)))
    if isinstance(e, Max):
        parts = [_raw(x, p) for x in e.args]
        return Interval(max(x.lo for x in parts), max(x.hi for x in parts))
    raise TypeError(f"cannot evaluate node {type(e).__name__}")


def _pow(e: Pow, p: int) -> Interval:
    k = fold(e.exponent)
    base = _raw(e.base, p)
    if k is not None and k.denominator == 1:
        return _int_pow(base, int(k), p)
    b = fold(e.base)
    if b == 0:
        # fold() already handled a certifiably positive exponent
        raise DomainError("zero base needs a certified positive exponent", certain=False)
    _require_positive(base, "power base")
    log_base = _ln(base, p)
    return _exp(_mul(log_base, _raw(e.exponent, p), p), p)


def eval_interval(expr, precision_bits: int) -> Interval:
    """Enclose the real value of ``expr``.

    The result is the intersection of raw evaluations at ``precision_bits``,
    ``precision_bits // 2``, ... down to 16 bits, so doubling the precision
    always yields a nested-or-equal interval.
    """
    if precision_bits < MIN_PRECISION:
        raise ValueError(f"precision_bits must be >= {MIN_PRECISION}")
    expr = lift(expr)
    levels = []
    p = precision_bits
    while p >= MIN_PRECISION:
        levels.append(p)
        p //= 2
    result = None
    for p in reversed(levels):
        try:
            cur = _raw(expr, p)
        except DomainError as err:
            if err.certain or p == precision_bits:
                raise
            continue
        result = cur if result is None else result.intersect(cur)
    return result

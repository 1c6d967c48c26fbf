"""Expression trees over exact rationals.

Nodes are frozen dataclasses, so structurally identical trees compare and hash
equal. Arithmetic operators build trees; nothing is evaluated at construction.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..errors import DomainError

Number = Union[int, Fraction]


class Expr:
    """Base class of all expression nodes."""

    __slots__ = ()

    def __add__(self, other):
        return Add(self, lift(other))

    def __radd__(self, other):
        return Add(lift(other), self)

    def __sub__(self, other):
        return Sub(self, lift(other))

    def __rsub__(self, other):
        return Sub(lift(other), self)

    def __mul__(self, other):
        return Mul(self, lift(other))

    def __rmul__(self, other):
        return Mul(lift(other), self)

    def __truediv__(self, other):
        return Div(self, lift(other))

    def __rtruediv__(self, other):
        return Div(lift(other), self)

    def __pow__(self, other):
        return Pow(self, lift(other))

    def __rpow__(self, other):
        return Pow(lift(other), self)

    def __neg__(self):
        return Sub(IntLit(0), self)


@dataclass(frozen=True, repr=False)
class IntLit(Expr):
    value: int

    def __repr__(self):
        return f"IntLit({self.value})"

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True, repr=False)
class RatLit(Expr):
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))

    def __repr__(self):
        return f"RatLit({self.value})"

    def __str__(self):
        return f"({self.value})" if self.value.denominator != 1 else str(self.value)


@dataclass(frozen=True, repr=False)
class _Binary(Expr):
    left: Expr
    right: Expr
    _symbol = "?"

    def __post_init__(self):
        object.__setattr__(self, "left", lift(self.left))
        object.__setattr__(self, "right", lift(self.right))

    def __repr__(self):
        return f"{type(self).__name__}({self.left!r}, {self.right!r})"

    def __str__(self):
        return f"({self.left} {self._symbol} {self.right})"


class Add(_Binary):
    _symbol = "+"


class Sub(_Binary):
    _symbol = "-"


class Mul(_Binary):
    _symbol = "*"


class Div(_Binary):
    _symbol = "/"


@dataclass(frozen=True, repr=False)
class Pow(Expr):
    base: Expr
    exponent: Expr

    def __post_init__(self):
        object.__setattr__(self, "base", lift(self.base))
        object.__setattr__(self, "exponent", lift(self.exponent))

    def __repr__(self):
        return f"Pow({self.base!r}, {self.exponent!r})"

    def __str__(self):
        return f"{_atom(self.base)}^{_atom(self.exponent)}"


@dataclass(frozen=True, repr=False)
class _Unary(Expr):
    arg: Expr
    _name = "?"

    def __post_init__(self):
        object.__setattr__(self, "arg", lift(self.arg))

    def __repr__(self):
        return f"{type(self).__name__}({self.arg!r})"

    def __str__(self):
        return f"{self._name}({self.arg})"


class Log2(_Unary):
    _name = "log2"


class Ln(_Unary):
    _name = "ln"


class Exp(_Unary):
    _name = "exp"


class Sqrt(_Unary):
    _name = "sqrt"


class Floor(_Unary):
    _name = "floor"


@dataclass(frozen=True, repr=False)
class Max(Expr):
    args: tuple

    def __post_init__(self):
        if not self.args:
            raise ValueError("Max needs at least one argument")
        object.__setattr__(self, "args", tuple(lift(a) for a in self.args))

    def __repr__(self):
        return f"Max({', '.join(map(repr, self.args))})"

    def __str__(self):
        return f"max({', '.join(map(str, self.args))})"


def _atom(e: Expr) -> str:
    s = str(e)
    if isinstance(e, (IntLit, _Unary, Max)) or s.startswith("("):
        return s
    return f"({s})"


def lift(x) -> Expr:
    """Turn an int, Fraction or Expr into an Expr."""
    if isinstance(x, Expr):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a number")
    if isinstance(x, int):
        return IntLit(x)
    if isinstance(x, Fraction):
        return IntLit(x.numerator) if x.denominator == 1 else RatLit(x)
    raise TypeError(f"cannot lift {type(x).__name__} into an expression")


def const(x: Number) -> Expr:
    return lift(Fraction(x))


def log2(x) -> Log2:
    return Log2(lift(x))


def ln(x) -> Ln:
    return Ln(lift(x))


def exp(x) -> Exp:
    return Exp(lift(x))


def sqrt(x) -> Sqrt:
    return Sqrt(lift(x))


def floor(x) -> Floor:
    return Floor(lift(x))


def maximum(*xs) -> Max:
    return Max(tuple(xs))


def power(base, exponent) -> Pow:
    return Pow(lift(base), lift(exponent))


# --- exact folding ---------------------------------------------------------


def exact_log2(q: Fraction) -> int | None:
    """Return k if q == 2**k exactly (k may be negative), else None."""
    if q <= 0:
        return None
    num, den = q.numerator, q.denominator
    if den == 1 and num & (num - 1) == 0:
        return num.bit_length() - 1
    if num == 1 and den & (den - 1) == 0:
        return -(den.bit_length() - 1)
    return None


def iroot(x: int, k: int) -> int:
    """Largest r >= 0 with r**k <= x, for x >= 0."""
    if x < 0 or k < 1:
        raise ValueError("iroot needs x >= 0 and k >= 1")
    if x < 2 or k == 1:
        return x
    if k == 2:
        return math.isqrt(x)
    r = 1 << -(-x.bit_length() // k)  # 2**ceil(bits/k) >= root
    while True:
        s = ((k - 1) * r + x // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def exact_root(q: Fraction, k: int) -> Fraction | None:
    """The rational k-th root of q >= 0 if it exists."""
    num, den = q.numerator, q.denominator
    a, b = iroot(num, k), iroot(den, k)
    if a ** k == num and b ** k == den:
        return Fraction(a, b)
    return None


@functools.lru_cache(maxsize=65536)
def fold(e: Expr) -> Fraction | None:
    """Exact rational value of ``e`` when it is symbolically determinable.

    Rational subtrees fold by exact arithmetic. Powers fold when the exponent
    is an integer, when the base is 0 or 1, when a rational exponent has an
    exact rational root, and through x^log2(y) = y^log2(x) when the base is a
    power of two. Returns None otherwise; raises DomainError when a folded
    argument is certainly outside its operation's domain.
    """
    if isinstance(e, IntLit):
        return Fraction(e.value)
    if isinstance(e, RatLit):
        return e.value
    if isinstance(e, _Binary):
        a, b = fold(e.left), fold(e.right)
        if a is None or b is None:
            return None
        if isinstance(e, Add):
            return a + b
        if isinstance(e, Sub):
            return a - b
        if isinstance(e, Mul):
            return a * b
        if b == 0:
            raise DomainError("division by zero")
        return a / b
    if isinstance(e, Pow):
        return _fold_pow(e)
    if isinstance(e, Max):
        vals = [fold(a) for a in e.args]
        return None if any(v is None for v in vals) else max(vals)
    a = fold(e.arg)
    if a is None:
        return None
    if isinstance(e, Floor):
        return Fraction(math.floor(a))
    if isinstance(e, Sqrt):
        if a < 0:
            raise DomainError(f"sqrt of negative value {a}")
        return exact_root(a, 2)
    if isinstance(e, (Log2, Ln)):
        if a <= 0:
            raise DomainError(f"logarithm of non-positive value {a}")
        if isinstance(e, Ln):
            return Fraction(0) if a == 1 else None
        k = exact_log2(a)
        return None if k is None else Fraction(k)
    if isinstance(e, Exp):
        return Fraction(1) if a == 0 else None
    raise TypeError(f"unknown node {type(e).__name__}")


def _fold_pow(e: Pow) -> Fraction | None:
    b = fold(e.base)
    x = fold(e.exponent)
    if b is not None and x is not None:
        if x.denominator == 1:
            if b == 0 and x <= 0:
                raise DomainError("zero base with non-positive exponent")
            return b ** int(x)
        if b < 0:
            raise DomainError(f"negative base {b} with fractional exponent")
        if b == 0:
            return Fraction(0) if x > 0 else None
        root = exact_root(b, x.denominator)
        return None if root is None else root ** x.numerator
    if b is None:
        return None
    if b == 1:
        return Fraction(1)
    if b == 0:
        return Fraction(0) if _provably_positive(e.exponent) else None
    if b < 0:
        raise DomainError(f"negative base {b} with non-integer exponent")
    if isinstance(e.exponent, Log2):
        k = exact_log2(b)
        a = fold(e.exponent.arg)
        if k is not None and a is not None:
            if a <= 0:
                raise DomainError(f"logarithm of non-positive value {a}")
            return a ** k
    return None


def _provably_positive(e: Expr) -> bool:
    from .interval import eval_interval

    try:
        return eval_interval(e, 64).lo > 0
    except DomainError:
        return False


@functools.lru_cache(maxsize=65536)
def canonical(e: Expr) -> Expr:
    """Replace every exactly foldable subtree by its literal."""
    v = fold(e)
    if v is not None:
        return lift(v)
    if isinstance(e, _Binary):
        return type(e)(canonical(e.left), canonical(e.right))
    if isinstance(e, Pow):
        return Pow(canonical(e.base), canonical(e.exponent))
    if isinstance(e, _Unary):
        return type(e)(canonical(e.arg))
    if isinstance(e, Max):
        return Max(tuple(canonical(a) for a in e.args))
    return e

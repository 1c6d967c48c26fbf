"""Tail-polynomial bounds: the cubic proof chain and the binomial-vs-n^eps lemma."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ..errors import DomainError, Undecidable
from ..exact import (
    Comparison,
    Expr,
    IntLit,
    Ordering3,
    Pow,
    compare,
    exp,
    floor_log2,
    lift,
    log2,
    maximum,
    sqrt,
)
from .catalog import almost_linear_exponent
from .combinators import log_quarter, nested_binomial_bound


def cubic_chain(d: int, n: int) -> list[tuple[str, Expr]]:
    """Successive majorants from the binomial bound up to the cubic bound.

    Each entry should be <= the next one; the caller decides each link.
    """
    if not (d >= 3 and n >= 1 << (d - 1)):
        raise DomainError(f"cubic chain needs d >= 3 and n >= 2^(d-1), got d={d}, n={n}")
    k = log_quarter(n)
    m = n - 3
    nn = IntLit(n)
    return [
        ("(n-3) C(k+d-3, k)", IntLit(nested_binomial_bound(d, n))),
        ("(n-3) C(2k, k)", IntLit(m * comb(2 * k, k))),
        ("(n-3) 4^k / sqrt(3k+1)", IntLit(m * 4 ** k) / sqrt(3 * k + 1)),
        ("(n-3) (n/4)^2 / sqrt(3 log2 n - 5)",
         lift(Fraction(m * n * n, 16)) / sqrt(3 * log2(nn) - 5)),
        ("n^3 / (16 sqrt(3 log2 n - 5))", nn ** 3 / (16 * sqrt(3 * log2(nn) - 5))),
    ]


def _binomial_le_power(binom: int, n: int, eps: Fraction) -> bool:
    """binom <= n**eps, exactly."""
    a, b = eps.numerator, eps.denominator
    lhs = binom ** b
    if n & (n - 1) == 0:
        # n = 2**k: compare binom**b against 2**(k*a)
        e = floor_log2(n) * a
        return lhs.bit_length() <= e or lhs == 1 << e
    if n.bit_length() * a <= 1 << 20:
        return lhs <= n ** a
    c = compare(IntLit(binom), Pow(IntLit(n), lift(eps)))
    if c.ordering is Ordering3.UNDECIDED:
        raise Undecidable(f"cannot decide C <= n^eps at n={n}")
    return c.le


@dataclass(frozen=True)
class Lemma73Result:
    epsilon: Fraction
    d: int
    n: int
    log_n: int
    binomial: int
    holds: bool
    threshold_exponent: int

    @property
    def above_threshold(self) -> bool:
        return self.log_n >= self.threshold_exponent

    @property
    def s(self) -> Expr:
        """max(64/eps^2, e) from the lemma's proof."""
        return maximum(lift(Fraction(64) / self.epsilon ** 2), exp(1))

    def ineq7(self) -> tuple[Expr, Expr]:
        """(e s)^(2 floor(log n)/s) versus n^(eps/2)."""
        es = exp(1) * self.s
        return Pow(es, 2 * self.log_n / self.s), Pow(IntLit(self.n), lift(self.epsilon / 2))

    def ineq8(self) -> tuple[Expr, Expr]:
        """(e s)^(2 floor(log n)/s + 1) versus n^eps."""
        es = exp(1) * self.s
        return Pow(es, 2 * self.log_n / self.s + 1), Pow(IntLit(self.n), lift(self.epsilon))

    def check_intermediates(self) -> tuple[Comparison, Comparison]:
        return compare(*self.ineq7()), compare(*self.ineq8())


def lemma73_check(epsilon, d: int, n: int) -> Lemma73Result:
    """Decide C(floor(log n) + d - 3, floor(log n)) <= n^eps exactly."""
    eps = Fraction(epsilon)
    if eps <= 0 or d < 3 or n < 1:
        raise DomainError(f"lemma check needs eps > 0, d >= 3, n >= 1; got {eps}, {d}, {n}")
    k = floor_log2(n)
    binom = comb(k + d - 3, k)
    return Lemma73Result(
        epsilon=eps, d=d, n=n, log_n=k, binomial=binom,
        holds=_binomial_le_power(binom, n, eps),
        threshold_exponent=almost_linear_exponent(d, eps),
    )

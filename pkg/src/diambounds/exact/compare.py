"""Decide orderings between expressions, with proofs or not at all."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ..errors import DomainError
from .expr import canonical, fold, lift
from .interval import eval_interval

LADDER = (64, 128, 256, 512, 1024, 2048, 4096)
MAX_PRECISION = LADDER[-1]


class Ordering3(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    PROVEN_EQUAL = "equal"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class Comparison:
    """Outcome of :func:`compare`.

    ``precision_bits`` is the rung that settled the question (0 for the
    symbolic path) or, for UNDECIDED, the last rung tried.
    """

    ordering: Ordering3
    precision_bits: int = 0

    @property
    def decided(self) -> bool:
        return self.ordering is not Ordering3.UNDECIDED

    @property
    def le(self) -> bool:
        """True iff lhs <= rhs is proven."""
        return self.ordering in (Ordering3.LESS, Ordering3.PROVEN_EQUAL)

    @property
    def ge(self) -> bool:
        return self.ordering in (Ordering3.GREATER, Ordering3.PROVEN_EQUAL)

    def flipped(self) -> "Comparison":
        swap = {Ordering3.LESS: Ordering3.GREATER, Ordering3.GREATER: Ordering3.LESS}
        return Comparison(swap.get(self.ordering, self.ordering), self.precision_bits)


def compare(lhs, rhs, max_bits: int = MAX_PRECISION) -> Comparison:
    """Compare two expressions rigorously.

    Equality is only ever established symbolically: identical trees, exact
    folding, or trees that coincide once foldable subtrees are replaced by
    their values. Strict orderings come from disjoint enclosures, trying each
    rung of the precision ladder up to ``max_bits``.
    """
    lhs, rhs = lift(lhs), lift(rhs)
    if lhs == rhs:
        return Comparison(Ordering3.PROVEN_EQUAL)
    a, b = fold(lhs), fold(rhs)
    if a is not None and b is not None:
        if a < b:
            return Comparison(Ordering3.LESS)
        if a > b:
            return Comparison(Ordering3.GREATER)
        return Comparison(Ordering3.PROVEN_EQUAL)
    if canonical(lhs) == canonical(rhs):
        return Comparison(Ordering3.PROVEN_EQUAL)
    rungs = [p for p in LADDER if p <= max_bits] or [max_bits]
    for p in rungs:
        try:
            x = eval_interval(lhs, p)
            y = eval_interval(rhs, p)
        except DomainError as err:
            if err.certain or p == rungs[-1]:
                raise
            continue
        if x.hi < y.lo:
            return Comparison(Ordering3.LESS, p)
        if x.lo > y.hi:
            return Comparison(Ordering3.GREATER, p)
    return Comparison(Ordering3.UNDECIDED, rungs[-1])


def floor_log2(n: int) -> int:
    """k with 2**k <= n < 2**(k+1)."""
    if n < 1:
        raise DomainError(f"floor_log2 needs n >= 1, got {n}")
    return n.bit_length() - 1

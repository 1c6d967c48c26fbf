"""Iterated Kalai-Kleitman sums and the nested binomial bounds derived from them."""

from __future__ import annotations

import enum
from math import comb
from typing import Callable

from ..errors import DomainError
from ..exact import floor_log2


class BaseRow(enum.Enum):
    """Three-dimensional bound the nested sums bottom out in."""

    UNBOUNDED_KLEE = "unbounded"  # Delta_u(3, n) <= n - 3
    BOUNDED_KLEE = "bounded"  # Delta_b(3, n) <= floor(2n/3) - 1

    def leading(self, n: int) -> int:
        if self is BaseRow.UNBOUNDED_KLEE:
            return n - 3
        return 2 * n // 3 - 1


def halvings(d: int, n: int) -> int:
    """floor(log2(n/d)): the largest k with d * 2**k <= n."""
    return floor_log2(n // d)


def iterated_kk(d: int, n: int, lower_dim_bound: Callable[[int], int]) -> int:
    """Sum_{i=0}^{K} 2**i * lower_dim_bound(n // 2**i) - 1 with K = floor(log2(n/d)).

    ``lower_dim_bound`` is a bound on the (d-1)-dimensional quantity as a
    function of the facet count.
    """
    if not n >= d >= 3:
        raise DomainError(f"iterated_kk needs n >= d >= 3, got d={d}, n={n}")
    total = 0
    for i in range(halvings(d, n) + 1):
        total += (1 << i) * lower_dim_bound(n >> i)
    return total - 1


def log_quarter(n: int) -> int:
    """floor(log2(n/4)), which is -1 for n < 4."""
    return floor_log2(n) - 2


def binomial_factor(d: int, n: int) -> int:
    """C(floor(log2(n/4)) + d - 3, floor(log2(n/4))), taken as 0 when n < 4."""
    k = log_quarter(n)
    if k < 0:
        return 0
    return comb(k + d - 3, k)


def nested_binomial_bound(d: int, n: int, base_row: BaseRow = BaseRow.UNBOUNDED_KLEE) -> int:
    if not n >= d >= 3:
        raise DomainError(f"nested_binomial_bound needs n >= d >= 3, got d={d}, n={n}")
    return base_row.leading(n) * binomial_factor(d, n)


def nested_sum_count(k: int, p: int, form: str = "shrinking") -> int:
    """Count index tuples of a p-fold nested sum by brute enumeration.

    ``form="shrinking"``: i_1 in [0, k], i_j in [0, k - i_1 - ... - i_{j-1}].
    ``form="chain"``: i_1 in [0, k], i_j in [0, i_{j-1}].
    """
    if form == "shrinking":
        def walk(depth: int, budget: int) -> int:
            if depth == p:
                return 1
            return sum(walk(depth + 1, budget - i) for i in range(budget + 1))
        return walk(0, k)
    if form == "chain":
        def walk(depth: int, cap: int) -> int:
            if depth == p:
                return 1
            return sum(walk(depth + 1, i) for i in range(cap + 1))
        return walk(0, k)
    raise ValueError(f"unknown nested-sum form {form!r}")

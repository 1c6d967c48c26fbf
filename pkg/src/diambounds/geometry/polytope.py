"""Exact H-representation polytopes: vertices, facets, vertex graph and diameter."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import comb, lcm

from ..errors import BudgetExceeded, Disconnected, DomainError, EmptyPolytope, Unbounded
from . import kernels

MAX_HALFSPACES = 24
MAX_DIM = 8


@dataclass(frozen=True)
class VertexRecord:
    coordinates: tuple
    tight_facets: frozenset


@dataclass(frozen=True, eq=False)
class HPolytope:
    """{x in Q^d : a.x <= b for every (a, b) in halfspaces}."""

    d: int
    halfspaces: tuple

    def __post_init__(self):
        if self.d < 1:
            raise DomainError(f"dimension must be >= 1, got {self.d}")
        rows = []
        for a, b in self.halfspaces:
            a = tuple(Fraction(x) for x in a)
            if len(a) != self.d:
                raise DomainError(f"halfspace has {len(a)} coefficients, expected {self.d}")
            rows.append((a, Fraction(b)))
        object.__setattr__(self, "halfspaces", tuple(rows))

    @classmethod
    def from_rows(cls, rows) -> "HPolytope":
        """Build from rows ``[a_1, ..., a_d, b]``."""
        rows = [list(r) for r in rows]
        if not rows:
            raise DomainError("no halfspaces")
        return cls(len(rows[0]) - 1, tuple((r[:-1], r[-1]) for r in rows))

    @property
    def m(self) -> int:
        return len(self.halfspaces)

    def rows(self) -> list[list[Fraction]]:
        return [list(a) + [b] for a, b in self.halfspaces]

    @cached_property
    def integer_system(self) -> tuple[list[list[int]], list[int]]:
        """Each halfspace scaled by the lcm of its denominators."""
        A, b = [], []
        for a, rhs in self.halfspaces:
            s = lcm(*(x.denominator for x in a), rhs.denominator)
            A.append([int(x * s) for x in a])
            b.append(int(rhs * s))
        return A, b

    def check_budget(self) -> None:
        if self.m > MAX_HALFSPACES or self.d > MAX_DIM:
            raise BudgetExceeded(
                f"enumeration budget is m <= {MAX_HALFSPACES}, d <= {MAX_DIM}; "
                f"got m={self.m}, d={self.d} (C(m,d) = {comb(self.m, self.d)})"
            )

    def contains(self, x) -> bool:
        return all(sum(ai * xi for ai, xi in zip(a, x)) <= b for a, b in self.halfspaces)

    def is_bounded(self) -> bool:
        self.check_budget()
        A, _ = self.integer_system
        return not kernels.has_recession_ray(A, self.d)

    @cached_property
    def vertices(self) -> tuple:
        return tuple(enumerate_vertices(self))

    def _tight_masks(self) -> list[int]:
        return [sum(1 << i for i in v.tight_facets) for v in self.vertices]

    def facets(self) -> list[frozenset]:
        """Irredundant facets, each given as its set of vertex indices.

        Halfspaces that touch the same facet are merged; redundant ones are
        dropped.
        """
        _require_bounded(self)
        A, _ = self.integer_system
        masks = self._tight_masks()
        seen = {}
        for i in range(self.m):
            verts = frozenset(k for k, mk in enumerate(masks) if mk >> i & 1)
            if not verts or verts in seen:
                continue
            eq = ~0
            for k in verts:
                eq &= masks[k]
            if kernels.mask_rank(A, eq) == 1:
                seen[verts] = i
        return sorted(seen, key=lambda s: seen[s])

    @property
    def facet_count(self) -> int:
        return len(self.facets())

    def edges(self) -> list[tuple[int, int]]:
        A, _ = self.integer_system
        return kernels.adjacent_pairs(A, self._tight_masks(), self.d)

    def product(self, other: "HPolytope") -> "HPolytope":
        zl, zr = (0,) * other.d, (0,) * self.d
        hs = [(a + zl, b) for a, b in self.halfspaces]
        hs += [(zr + a, b) for a, b in other.halfspaces]
        return HPolytope(self.d + other.d, tuple(hs))

    __mul__ = product


def enumerate_vertices(P: HPolytope) -> list[VertexRecord]:
    """All vertices by brute basis enumeration, sorted by coordinates."""
    P.check_budget()
    A, b = P.integer_system
    out = []
    for nums, den, mask in kernels.solve_vertices(A, b, P.d):
        coords = tuple(Fraction(x, den) for x in nums)
        tight = frozenset(i for i in range(P.m) if mask >> i & 1)
        out.append(VertexRecord(coords, tight))
    if not out:
        raise EmptyPolytope(f"no vertex found among {comb(P.m, P.d)} bases")
    out.sort(key=lambda v: v.coordinates)
    return out


def _require_bounded(P: HPolytope) -> None:
    if not P.is_bounded():
        raise Unbounded("recession cone {x : a.x <= 0} contains a nonzero ray")


def polytope_diameter(P: HPolytope) -> int:
    _require_bounded(P)
    n = len(P.vertices)
    diam = kernels.graph_diameter(n, P.edges())
    if diam < 0:
        raise Disconnected("vertex graph is disconnected")
    return diam


def cube(d: int) -> HPolytope:
    hs = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        hs.append((tuple(e), 1))
        e[i] = -1
        hs.append((tuple(e), 0))
    return HPolytope(d, tuple(hs))


def simplex(d: int) -> HPolytope:
    hs = []
    for i in range(d):
        e = [0] * d
        e[i] = -1
        hs.append((tuple(e), 0))
    hs.append(((1,) * d, 1))
    return HPolytope(d, tuple(hs))


def cross_polytope(d: int) -> HPolytope:
    hs = []
    for mask in range(1 << d):
        hs.append((tuple(-1 if mask >> i & 1 else 1 for i in range(d)), 1))
    return HPolytope(d, tuple(hs))


def prism(P: HPolytope) -> HPolytope:
    return P.product(cube(1))

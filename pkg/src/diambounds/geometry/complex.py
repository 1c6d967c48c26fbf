"""Pure simplicial complexes given by their facets, with dual graph and predicates."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from ..errors import Disconnected, DomainError
from . import kernels


@dataclass(frozen=True, eq=False)
class PureComplex:
    """(d-1)-dimensional complex on labels 0..n-1; every facet has d labels."""

    d: int
    n: int
    facets: tuple

    def __post_init__(self):
        facets = tuple(frozenset(f) for f in self.facets)
        object.__setattr__(self, "facets", facets)
        if self.d < 1:
            raise DomainError(f"facet size must be >= 1, got {self.d}")
        if len(set(facets)) != len(facets):
            raise DomainError("duplicate facet")
        used = set()
        for f in facets:
            if len(f) != self.d:
                raise DomainError(f"facet {sorted(f)} has {len(f)} vertices, expected {self.d}")
            if any(not 0 <= v < self.n for v in f):
                raise DomainError(f"facet {sorted(f)} has a label outside 0..{self.n - 1}")
            used |= f
        if len(used) != self.n:
            missing = sorted(set(range(self.n)) - used)
            raise DomainError(f"labels {missing} appear in no facet")

    def without(self, index: int) -> "PureComplex":
        """Drop one facet; labels left unused are removed and renumbered."""
        rest = [f for i, f in enumerate(self.facets) if i != index]
        labels = sorted(set().union(*rest)) if rest else []
        relabel = {v: i for i, v in enumerate(labels)}
        return PureComplex(self.d, len(labels), tuple(frozenset(relabel[v] for v in f) for f in rest))

    @cached_property
    def ridges(self) -> dict:
        """(d-2)-faces mapped to the indices of the facets containing them."""
        out = defaultdict(list)
        for i, f in enumerate(self.facets):
            for v in f:
                out[f - {v}].append(i)
        return dict(out)

    @cached_property
    def dual_edges(self) -> list[tuple[int, int]]:
        edges = set()
        for members in self.ridges.values():
            edges.update(combinations(members, 2))
        return sorted(edges)


def dual_diameter(C: PureComplex) -> int:
    diam = kernels.graph_diameter(len(C.facets), C.dual_edges)
    if diam < 0:
        raise Disconnected("dual graph is disconnected")
    return diam


@dataclass(frozen=True)
class ComplexPredicates:
    is_pure: bool
    is_pseudomanifold_without_boundary: bool
    is_normal: bool

    def to_dict(self) -> dict:
        return {
            "is_pure": self.is_pure,
            "is_pseudomanifold_without_boundary": self.is_pseudomanifold_without_boundary,
            "is_normal": self.is_normal,
        }


def _connected(nodes: list[int], adj: dict) -> bool:
    if len(nodes) <= 1:
        return True
    inside = set(nodes)
    stack, seen = [nodes[0]], {nodes[0]}
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v in inside and v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(inside)


def complex_predicates(C: PureComplex) -> ComplexPredicates:
    pure = all(len(f) == C.d for f in C.facets)
    pm = all(len(members) == 2 for members in C.ridges.values())
    adj = defaultdict(set)
    for u, v in C.dual_edges:
        adj[u].add(v)
        adj[v].add(u)
    # every face, the empty face included, must have a connected star
    stars = defaultdict(list)
    for i, f in enumerate(C.facets):
        for k in range(len(f) + 1):
            for face in combinations(sorted(f), k):
                stars[face].append(i)
    normal = all(_connected(members, adj) for members in stars.values())
    return ComplexPredicates(pure, pm, normal)


def simplex_boundary(d: int) -> PureComplex:
    """Boundary of the d-simplex: all d-subsets of d + 1 labels."""
    return PureComplex(d, d + 1, tuple(frozenset(s) for s in combinations(range(d + 1), d)))


def cross_polytope_boundary(d: int) -> PureComplex:
    """Boundary of the d-dimensional cross-polytope; labels 2i and 2i+1 are antipodal."""
    facets = []
    for mask in range(1 << d):
        facets.append(frozenset(2 * i + (mask >> i & 1) for i in range(d)))
    return PureComplex(d, 2 * d, tuple(facets))


def octahedron_boundary() -> PureComplex:
    return cross_polytope_boundary(3)


def cycle(n: int) -> PureComplex:
    if n < 3:
        raise DomainError(f"a cycle needs n >= 3 vertices, got {n}")
    return PureComplex(2, n, tuple(frozenset({i, (i + 1) % n}) for i in range(n)))

"""Pure-Python integer kernels. Reference implementation and fallback for ``_kernels``.

All matrices are lists of rows of Python ints, so nothing here can overflow.
Tight sets are bitmasks over constraint indices.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from math import gcd

BACKEND = "python"


def det(rows: list[list[int]]) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    k = len(rows)
    if k == 0:
        return 1
    m = [list(r) for r in rows]
    sign, prev = 1, 1
    for c in range(k - 1):
        if m[c][c] == 0:
            for r in range(c + 1, k):
                if m[r][c] != 0:
                    m[c], m[r] = m[r], m[c]
                    sign = -sign
                    break
            else:
                return 0
        p = m[c][c]
        for r in range(c + 1, k):
            for j in range(c + 1, k):
                m[r][j] = (p * m[r][j] - m[r][c] * m[c][j]) // prev
        prev = p
    return sign * m[k - 1][k - 1]


def rank(rows: list[list[int]]) -> int:
    if not rows:
        return 0
    m = [list(r) for r in rows]
    nr, nc = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(nc):
        piv = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                m[i][j] = (p * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = p
        r += 1
        if r == nr:
            break
    return r


def _solve(A, b, subset, d):
    """Cramer solution of A_S x = b_S as (numerators, positive denominator), or None."""
    sub = [A[i] for i in subset]
    den = det(sub)
    if den == 0:
        return None
    nums = []
    for j in range(d):
        nums.append(det([r[:j] + [b[i]] + r[j + 1:] for r, i in zip(sub, subset)]))
    if den < 0:
        den, nums = -den, [-x for x in nums]
    g = den
    for x in nums:
        g = gcd(g, x)
    return tuple(x // g for x in nums), den // g


def solve_vertices(A: list[list[int]], b: list[int], d: int) -> list[tuple]:
    """Feasible basic solutions as (numerators, denominator, tight mask).

    Coincident points found from different bases are merged.
    """
    found = {}
    for subset in combinations(range(len(A)), d):
        sol = _solve(A, b, subset, d)
        if sol is None or sol in found:
            continue
        nums, den = sol
        mask = 0
        for i, (row, bi) in enumerate(zip(A, b)):
            lhs = sum(a * x for a, x in zip(row, nums))
            rhs = bi * den
            if lhs > rhs:
                break
            if lhs == rhs:
                mask |= 1 << i
        else:
            found[sol] = mask
    return [(nums, den, mask) for (nums, den), mask in found.items()]


def has_recession_ray(A: list[list[int]], d: int) -> bool:
    """True iff {x : A x <= 0} contains a nonzero vector."""
    if rank(A) < d:
        return True
    for subset in combinations(range(len(A)), d - 1):
        sub = [A[i] for i in subset]
        # generalized cross product spans the kernel when rank(sub) = d - 1
        ray = [(-1) ** j * det([r[:j] + r[j + 1:] for r in sub]) for j in range(d)]
        if not any(ray):
            continue
        dots = [sum(a * x for a, x in zip(row, ray)) for row in A]
        if all(t <= 0 for t in dots) or all(t >= 0 for t in dots):
            return True
    return False


def _rows(A, mask):
    return [row for i, row in enumerate(A) if mask >> i & 1]


def mask_rank(A: list[list[int]], mask: int) -> int:
    return rank(_rows(A, mask))


def adjacent_pairs(A: list[list[int]], masks: list[int], d: int) -> list[tuple[int, int]]:
    """Vertex pairs whose common tight set has rank d - 1."""
    cache: dict[int, int] = {}
    out = []
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            common = masks[i] & masks[j]
            if bin(common).count("1") < d - 1:
                continue
            r = cache.get(common)
            if r is None:
                r = cache[common] = mask_rank(A, common)
            if r == d - 1:
                out.append((i, j))
    return out


def graph_diameter(n_nodes: int, edges: list[tuple[int, int]]) -> int:
    """Exact diameter by BFS from every node; -1 when disconnected."""
    if n_nodes == 0:
        return -1
    adj = [[] for _ in range(n_nodes)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    best = 0
    for s in range(n_nodes):
        dist = [-1] * n_nodes
        dist[s] = 0
        q = deque([s])
        seen = 1
        while q:
            u = q.popleft()
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    seen += 1
                    q.append(v)
        if seen < n_nodes:
            return -1
        best = max(best, max(dist))
    return best

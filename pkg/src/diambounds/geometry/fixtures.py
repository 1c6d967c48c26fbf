"""Deterministic fixture corpus for the cross-checks."""

from __future__ import annotations

import random
from pathlib import Path

from . import complex as cx
from . import polytope as pt
from .formats import format_complex, format_hrep

DEFAULT_SEED = 20240611
RANDOM_COUNT = 20


def random_polytope(d: int, m: int, rng: random.Random) -> pt.HPolytope:
    """m - 2d random halfspaces with the origin strictly inside, plus the box [-5, 5]^d."""
    if m < 2 * d:
        raise ValueError(f"need m >= 2d to fit the bounding box, got d={d}, m={m}")
    hs = []
    while len(hs) < m - 2 * d:
        a = tuple(rng.randint(-5, 5) for _ in range(d))
        if any(a):
            hs.append((a, rng.randint(1, 5)))
    for i in range(d):
        for s in (1, -1):
            e = [0] * d
            e[i] = s
            hs.append((tuple(e), 5))
    return pt.HPolytope(d, tuple(hs))


def random_polytopes(seed: int = DEFAULT_SEED, count: int = RANDOM_COUNT):
    """``count`` bounded instances with d <= 4 and m <= 12, plus the seed used."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        d = rng.randint(2, 4)
        m = rng.randint(2 * d + 1, 12)
        out.append((f"random-{k:02d}", random_polytope(d, m, rng)))
    return out


def polytope_corpus(seed: int = DEFAULT_SEED) -> list[tuple[str, pt.HPolytope]]:
    out = [(f"cube-{d}", pt.cube(d)) for d in range(2, 6)]
    out += [(f"simplex-{d}", pt.simplex(d)) for d in range(2, 7)]
    out += [(f"cross-{d}", pt.cross_polytope(d)) for d in range(2, 5)]
    out += random_polytopes(seed)
    return out


def complex_corpus() -> list[tuple[str, cx.PureComplex]]:
    out = [(f"simplex-boundary-{d}", cx.simplex_boundary(d)) for d in range(2, 6)]
    out += [(f"cross-boundary-{d}", cx.cross_polytope_boundary(d)) for d in range(2, 5)]
    out += [(f"cycle-{n}", cx.cycle(n)) for n in range(4, 13)]
    return out


def write_corpus(directory, seed: int = DEFAULT_SEED) -> list[Path]:
    root = Path(directory)
    root.mkdir(parents=True, exist_ok=True)
    written = []
    for name, P in polytope_corpus(seed):
        notes = (f"seed: {seed}",) if name.startswith("random") else ()
        path = root / f"{name}.hrep"
        path.write_text(format_hrep(P, (name,) + notes))
        written.append(path)
    for name, C in complex_corpus():
        path = root / f"{name}.complex"
        path.write_text(format_complex(C, (name,)))
        written.append(path)
    return written

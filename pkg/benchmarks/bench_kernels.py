"""Compare the compiled geometry kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from diambounds.geometry import _pykernels, cross_polytope, cube, random_polytope

try:
    from diambounds.geometry import _kernels
except ImportError:
    _kernels = None


def workload(mod, A, b, d):
    verts = mod.solve_vertices(A, b, d)
    masks = [m for _, _, m in verts]
    edges = mod.adjacent_pairs(A, masks, d)
    return mod.has_recession_ray(A, d), len(verts), mod.graph_diameter(len(verts), edges)


def timed(mod, case, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = workload(mod, *case)
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rng = random.Random(7)
    cases = [
        ("cube-5", cube(5)),
        ("cube-6", cube(6)),
        ("cross-4", cross_polytope(4)),
        ("random d=4 m=16", random_polytope(4, 16, rng)),
        ("random d=5 m=18", random_polytope(5, 18, rng)),
    ]
    print(f"{'instance':18} {'python s':>10} {'cython s':>10} {'speedup':>8}  diameter")
    for name, P in cases:
        A, b = P.integer_system
        case = (A, b, P.d)
        tp, out_p = timed(_pykernels, case, args.repeat)
        if _kernels is None:
            print(f"{name:18} {tp:10.4f} {'n/a':>10} {'':>8}  {out_p[2]}")
            continue
        tc, out_c = timed(_kernels, case, args.repeat)
        assert out_p == out_c, (name, out_p, out_c)
        print(f"{name:18} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}x  {out_c[2]}")


if __name__ == "__main__":
    main()

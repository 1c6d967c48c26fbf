"""Acceptance criteria, one test each.

Every test records a one-line PASS/FAIL verdict; the lines are printed in the
pytest terminal summary and when this file is run as a script.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

import mpmath
import pytest

from diambounds.bounds import (
    BoundFamily,
    BoundParams,
    bound_value,
    cubic_chain,
    iterated_kk,
    lemma73_check,
    nested_binomial_bound,
    nested_sum_count,
)
from diambounds.cli import main as cli_main
from diambounds.exact import IntLit, Ordering3, Pow, compare, fold, lift, log2, sqrt
from diambounds.geometry import (
    complex_corpus,
    cross_check,
    cross_polytope,
    cube,
    cycle,
    dual_diameter,
    octahedron_boundary,
    polytope_corpus,
    polytope_diameter,
    simplex,
    simplex_boundary,
)
from diambounds.tables import SequenceKind, eval_sequence
from diambounds.verify import verify_known_values

from oracles import direct, mp_eval

RESULTS: dict[int, str] = {}


def record(number: int, title: str, ok: bool, detail: str) -> None:
    RESULTS[number] = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title} ({detail})"
    assert ok, RESULTS[number]


def test_c01_appendix_reproduction(capsys):
    t0 = time.perf_counter()
    codes = {}
    for suite in ("appendix-a1", "appendix-a2", "appendix-a3"):
        codes[suite] = cli_main(["verify", "--suite", suite])
    out = capsys.readouterr().out
    elapsed = time.perf_counter() - t0
    passed = out.count("Passed ")
    ok = all(c == 0 for c in codes.values()) and passed == 48 + 28 + 17 and "Failed" not in out
    ok = ok and "Undecided" not in out.replace("undecided", "") and elapsed < 5
    record(1, "sporadic grids reproduce", ok, f"{passed} Passed lines, exit codes {list(codes.values())}, {elapsed:.2f}s")


def test_c02_recursion_oracle():
    mismatches, checked = 0, 0
    for kind in SequenceKind:
        for d in range(3, 7):
            for n in range(d, 65):
                checked += 1
                mismatches += eval_sequence(kind, d, n) != direct(kind.value, d, n)
    record(2, "memoized tables equal direct recursion", mismatches == 0, f"{checked} cells, {mismatches} mismatches")


def test_c03_iterated_kk_alignment():
    bad = [n for n in range(4, 129)
           if iterated_kk(4, n, lambda m: m - 3) != eval_sequence(SequenceKind.DELTA_TILDE_U, 4, n)]
    record(3, "iterated KK at d=4 equals the Delta-u table", not bad, f"125 values, mismatches {bad[:5]}")


def test_c04_index_swap():
    bad = []
    for k in range(0, 13):
        for p in range(1, 7):
            want = mpmath.binomial(k + p, k)
            for form in ("shrinking", "chain"):
                if nested_sum_count(k, p, form) != want:
                    bad.append((k, p, form))
    record(4, "nested sums equal C(k+p, k)", not bad, f"156 checks, failures {bad[:5]}")


def test_c05_binomial_vs_table():
    bad = [(d, n) for d in range(4, 8) for n in range(2 * d, 201)
           if nested_binomial_bound(d, n) < eval_sequence(SequenceKind.DELTA_TILDE_U, d, n)]
    record(5, "nested binomial bound >= Delta-u table", not bad, f"failures {bad[:5]}")


def test_c06_cubic_chain():
    undecided = failed = total = 0
    for d in (3, 4, 5, 6):
        n0 = 1 << (d - 1)
        for n in range(n0, n0 + 65):
            p = BoundParams(d, n)
            cubic = bound_value(BoundFamily.CUBIC, p)
            pairs = [(IntLit(nested_binomial_bound(d, n)), cubic)]
            chain = cubic_chain(d, n)
            pairs += [(a, b) for (_, a), (_, b) in zip(chain, chain[1:])]
            for lhs, rhs in pairs:
                total += 1
                c = compare(lhs, rhs, max_bits=512)
                undecided += c.ordering is Ordering3.UNDECIDED
                failed += c.ordering is Ordering3.GREATER
    ok = undecided == 0 and failed == 0
    record(6, "cubic bound dominates the binomial bound", ok,
           f"{total} comparisons at <= 512 bits, {failed} failed, {undecided} undecided")


def test_c07_lemma_checks():
    eps = Fraction(2)
    bad, total = [], 0
    for d in (3, 4, 5):
        k0 = -(-32 * d // 4)
        for k in range(k0, k0 + 21):
            total += 1
            r = lemma73_check(eps, d, 2 ** k)
            if not (r.holds and r.above_threshold):
                bad.append((d, k))
    record(7, "binomial <= n^eps from the threshold on", not bad, f"{total} exact checks, failures {bad}")


def test_c08_known_values():
    rep = verify_known_values()
    s = rep.summary
    record(8, "known exact diameters below every bound", rep.ok,
           f"{s['total']} comparisons, {s['Fail']} failed, {s['Undecided']} undecided")


def test_c09_geometry_ground_truth():
    checks = [
        polytope_diameter(cube(3)) == 3,
        polytope_diameter(cube(4)) == 4,
        all(polytope_diameter(simplex(d)) == 1 for d in range(1, 7)),
        polytope_diameter(cross_polytope(3)) == 2,
        dual_diameter(simplex_boundary(3)) == 1,
        dual_diameter(octahedron_boundary()) == 3,
        all(dual_diameter(cycle(n)) == n // 2 for n in range(4, 13)),
    ]
    reports = [cross_check(P, name=name) for name, P in polytope_corpus()]
    reports += [cross_check(C, name=name) for name, C in complex_corpus()]
    cases = sum(len(r.cases) for r in reports)
    ok = all(checks) and all(r.ok for r in reports)
    record(9, "true diameters and fixture cross-checks", ok,
           f"{sum(checks)}/{len(checks)} ground-truth checks, {len(reports)} fixtures, {cases} bound comparisons")


def _random_expr(rng: random.Random, depth: int):
    if depth == 0 or rng.random() < 0.25:
        return lift(Fraction(rng.randint(1, 60), rng.randint(1, 12)))
    a = _random_expr(rng, depth - 1)
    op = rng.randrange(6)
    if op == 0:
        return a + _random_expr(rng, depth - 1)
    if op == 1:
        return a * _random_expr(rng, depth - 1)
    if op == 2:
        return a / _random_expr(rng, depth - 1)
    if op == 3:
        return Pow(a, log2(rng.randint(2, 12)))
    if op == 4:
        return sqrt(a)
    return log2(a + 1)


def _reference_order(a, b):
    ra, rb = mp_eval(a), mp_eval(b)
    with mpmath.workdps(320):
        if abs(ra - rb) <= mpmath.mpf(2) ** -1000 * (1 + abs(ra)):
            return Ordering3.PROVEN_EQUAL
        return Ordering3.LESS if ra < rb else Ordering3.GREATER


def test_c10_comparator_soundness():
    rng = random.Random(1729)
    contradictions = disagreements = 0
    for i in range(500):
        a = _random_expr(rng, 3)
        if i % 10 == 0:
            b = a  # same tree
        elif i % 10 == 1:
            b = _random_expr(rng, 3) + 0
        else:
            b = _random_expr(rng, 3)
        got = compare(a, b, max_bits=1024).ordering
        ref = _reference_order(a, b)
        if got is Ordering3.UNDECIDED:
            disagreements += 1
        elif got is not ref:
            contradictions += 1
    probes = []
    for k in range(1, 13):
        n = 2 ** k
        for m in (3, 5, 7, 12, n):
            probes.append(compare(Pow(n, log2(m)), IntLit(m) ** k).ordering)
        probes.append(compare(log2(n), k).ordering)
        probes.append(compare(Pow(IntLit(n) - n // 2, log2(n)), 2 ** ((k - 1) * k)).ordering)
    probes_ok = all(p is Ordering3.PROVEN_EQUAL for p in probes)
    ok = contradictions == 0 and disagreements == 0 and probes_ok
    record(10, "comparator agrees with a 1024-bit reference", ok,
           f"500 pairs, {contradictions} contradictions, {disagreements} undecided; "
           f"{sum(p is Ordering3.PROVEN_EQUAL for p in probes)}/{len(probes)} power-of-two probes ProvenEqual")


def test_c11_dominance():
    bad = []
    for d in range(3, 11):
        for n in range(d, 41):
            p = BoundParams(d, n)
            b74, lar = fold(bound_value(BoundFamily.BARNETTE74, p)), fold(bound_value(BoundFamily.LARMAN, p))
            assert isinstance(b74, Fraction) and isinstance(lar, Fraction)
            if (b74 < lar) != (n + 2 * d > 5):
                bad.append((d, n))
    record(11, "Barnette 1974 beats Larman iff n + 2d > 5", not bad, f"{sum(41 - d for d in range(3, 11))} pairs, failures {bad}")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))

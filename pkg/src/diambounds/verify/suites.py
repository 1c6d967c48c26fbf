"""Verification suites: sporadic grids, induction steps, index swap, known diameters."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ..bounds import BoundFamily, BoundParams, Target, applicable_families, bound_value
from ..errors import DomainError
from ..exact import IntLit, Pow, compare, lift, log2
from ..tables import SequenceKind, eval_sequence
from .report import VerificationReport, Verdict, verdict_ge, verdict_le


class Appendix(enum.Enum):
    A1 = "appendix-a1"
    A2 = "appendix-a2"
    A3 = "appendix-a3"


def appendix_grid(which: Appendix) -> list[tuple[int, int]]:
    """(d, n) cases in the order the sporadic-case scripts print them."""
    cases = []
    if which is Appendix.A1:
        for d in range(4, 8):
            for n in range(4, 46):
                if d == 4 or 2 * d <= n < d + 8:
                    cases.append((d, n))
    elif which is Appendix.A2:
        for d in range(4, 11):
            for n in range(8, 21):
                if 2 * d <= n < d + 11:
                    cases.append((d, n))
    else:
        for d in range(4, 8):
            for n in range(5, 16):
                if d == 4 or 2 * d <= n < d + 8:
                    cases.append((d, n))
    return cases


_APPENDIX = {
    Appendix.A1: (SequenceKind.DELTA_TILDE_U, BoundFamily.SK),
    Appendix.A2: (SequenceKind.DELTA_TILDE_B, BoundFamily.POLYTOPE_SK),
    Appendix.A3: (SequenceKind.SIGMA_TILDE, BoundFamily.SIGMA_SK),
}


def verify_appendix(which: Appendix | str) -> VerificationReport:
    which = Appendix(which) if isinstance(which, str) else which
    kind, family = _APPENDIX[which]
    rep = VerificationReport(which.value)
    for d, n in appendix_grid(which):
        tilde = eval_sequence(kind, d, n)
        bound = bound_value(family, BoundParams(d, n))
        rep.add({"d": d, "n": n}, tilde, bound, verdict_le(compare(tilde, bound)))
    return rep


class InductionTheorem(enum.Enum):
    T31 = "T31"  # polyhedra, (n-d)^log(d-1)
    T41 = "T41"  # polytopes, (2/3 (n-d+3/2))^log(d-1)
    T53 = "T53"  # pseudomanifolds, (n-d)^log d

    @property
    def min_slack(self) -> int:
        return 11 if self is InductionTheorem.T41 else 8

    @property
    def min_dim(self) -> int:
        return 4 if self is InductionTheorem.T53 else 5

    def in_region(self, d: int, n: int) -> bool:
        return d >= self.min_dim and n >= 2 * d and n - d >= self.min_slack


def verify_induction_step(theorem: InductionTheorem | str, d: int, n: int) -> VerificationReport:
    """Check each link of the induction-step chain at one (d, n)."""
    th = InductionTheorem(theorem) if isinstance(theorem, str) else theorem
    if not th.in_region(d, n):
        raise DomainError(
            f"{th.value} induction step needs d >= {th.min_dim}, n >= 2d, "
            f"n - d >= {th.min_slack}; got d={d}, n={n}"
        )
    rep = VerificationReport(f"induction-{th.value}")
    half = Fraction(n, 2)

    def link(label, lhs, rhs, ge=False):
        c = compare(lhs, rhs)
        rep.add({"d": d, "n": n, "link": label}, lhs, rhs,
                verdict_ge(c) if ge else verdict_le(c))

    if th is InductionTheorem.T41:
        x = lift(Fraction(2, 3) * (n - d + Fraction(3, 2)))
        x_half = lift(Fraction(2, 3) * (half - d + Fraction(3, 2)))
        q, c_dim, lower = lift(Fraction(d - 2, d - 1)), d - 1, d - 2
        link("log2(X) >= 3", log2(x), IntLit(3), ge=True)
        link("X(n/2) <= X/2", x_half, x / 2)
    else:
        x = IntLit(n - d)
        x_half = lift(half - d)
        if th is InductionTheorem.T31:
            q, c_dim, lower = lift(Fraction(d - 2, d - 1)), d - 1, d - 2
        else:
            q, c_dim, lower = lift(Fraction(d - 1, d)), d, d - 1
        link("log2(n-d) >= 3", log2(x), IntLit(3), ge=True)
        link("n/2-d <= (n-d)/2", x_half, x / 2)
    link("q^log2(X) <= q^3", Pow(q, log2(x)), q ** 3)
    bracket = q ** 3 + lift(Fraction(2, c_dim)) + 2 / Pow(IntLit(c_dim), log2(x))
    if th is InductionTheorem.T53:
        poly = d ** 3 - d ** 2 + 3 * d + 1
        link("bracket <= (d^3-d^2+3d+1)/d^3", bracket, lift(Fraction(poly, d ** 3)))
        link("d^3-d^2+3d+1 <= d^3", IntLit(poly), IntLit(d ** 3))
    link("bracket <= 1", bracket, IntLit(1))
    step = Pow(x, log2(lower)) + 2 * Pow(x_half, log2(c_dim)) + 2
    link("step", step, Pow(x, log2(c_dim)))
    return rep


def verify_induction_region(theorem: InductionTheorem | str, d_max: int = 12,
                            slack_span: int = 40) -> VerificationReport:
    th = InductionTheorem(theorem) if isinstance(theorem, str) else theorem
    rep = VerificationReport(f"induction-{th.value}")
    for d in range(th.min_dim, d_max + 1):
        start = max(2 * d, d + th.min_slack)
        for n in range(start, d + th.min_slack + slack_span):
            rep.extend(verify_induction_step(th, d, n))
    return rep


def verify_index_swap(k: int, p: int) -> VerificationReport:
    """Brute-force both nested-sum forms and compare with C(k+p, k)."""
    from ..bounds import nested_sum_count

    if k < 0 or p < 1:
        raise DomainError(f"index swap needs k >= 0, p >= 1; got k={k}, p={p}")
    rep = VerificationReport("index-swap")
    target = comb(k + p, k)
    for form in ("shrinking", "chain"):
        count = nested_sum_count(k, p, form)
        rep.add({"k": k, "p": p, "form": form}, count, target,
                Verdict.PASS if count == target else Verdict.FAIL)
    return rep


def verify_index_swap_grid(k_max: int = 12, p_max: int = 6) -> VerificationReport:
    rep = VerificationReport("index-swap")
    for k in range(k_max + 1):
        for p in range(1, p_max + 1):
            rep.extend(verify_index_swap(k, p))
    return rep


@dataclass(frozen=True)
class KnownValue:
    target: Target
    d: int
    n: int
    value: int
    citation: str


KNOWN_VALUES = (
    KnownValue(Target.DELTA_B, 4, 9, 5, "Klee"),
    KnownValue(Target.DELTA_B, 5, 10, 5, "Klee"),
    KnownValue(Target.DELTA_B, 4, 10, 5, "Goodey"),
    KnownValue(Target.DELTA_B, 5, 11, 6, "Goodey"),
    KnownValue(Target.DELTA_B, 4, 11, 6, "Bremner, Schewe"),
    KnownValue(Target.DELTA_B, 6, 12, 6, "Bremner, Schewe"),
    KnownValue(Target.DELTA_B, 4, 12, 7, "Bremner et al."),
    KnownValue(Target.DELTA_B, 5, 12, 7, "Bremner et al."),
)

# Bremner-Schewe: Delta_b(d, n) <= n - d whenever n - d <= 6
HIRSCH_REGION_SLACK = 6


def verify_known_values() -> VerificationReport:
    rep = VerificationReport("known-values")
    for kv in KNOWN_VALUES:
        p = BoundParams(kv.d, kv.n)
        base = {"d": kv.d, "n": kv.n}
        for fam in applicable_families(kv.target, p, include_conjectures=True):
            val = bound_value(fam, p)
            rep.add({**base, "bound": fam.value}, kv.value, val,
                    verdict_le(compare(kv.value, val)), kv.citation)
        kind = SequenceKind.DELTA_TILDE_B if kv.target is Target.DELTA_B else SequenceKind.DELTA_TILDE_U
        tilde = eval_sequence(kind, kv.d, kv.n)
        rep.add({**base, "bound": f"tilde-{kind.value}"}, kv.value, tilde,
                Verdict.PASS if kv.value <= tilde else Verdict.FAIL, kv.citation)
        if kv.n - kv.d <= HIRSCH_REGION_SLACK:
            rep.add({**base, "bound": "n-d (n-d <= 6)"}, kv.value, kv.n - kv.d,
                    Verdict.PASS if kv.value <= kv.n - kv.d else Verdict.FAIL,
                    "Bremner, Schewe")
    return rep


SUITES = ("appendix-a1", "appendix-a2", "appendix-a3", "induction", "index-swap", "known-values")


def run_suite(name: str) -> list[VerificationReport]:
    if name == "all":
        return [r for s in SUITES for r in run_suite(s)]
    if name in ("appendix-a1", "appendix-a2", "appendix-a3"):
        return [verify_appendix(name)]
    if name == "induction":
        return [verify_induction_region(t) for t in InductionTheorem]
    if name == "index-swap":
        return [verify_index_swap_grid()]
    if name == "known-values":
        return [verify_known_values()]
    raise ValueError(f"unknown suite {name!r}")

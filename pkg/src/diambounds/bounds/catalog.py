"""Catalog of diameter upper bounds as exact expression builders.

Every family carries the targets it bounds, whether it needs a tolerance
epsilon, a citation, a human-readable hypothesis, and a predicate deciding that
hypothesis exactly (thresholds on powers of two are compared on exponents).
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ..errors import DomainError, NotApplicable, Undecidable
from ..exact import (
    LADDER,
    Expr,
    IntLit,
    Ordering3,
    Pow,
    compare,
    eval_interval,
    floor_log2,
    fold,
    lift,
    ln,
    log2,
    sqrt,
)
from .combinators import BaseRow, nested_binomial_bound


class Target(enum.Enum):
    DELTA_U = "delta-u"  # unbounded polyhedra
    DELTA_B = "delta-b"  # polytopes
    SIGMA = "sigma"  # normal pseudomanifolds, n = number of vertices

    @classmethod
    def parse(cls, text: str) -> "Target":
        key = text.strip().lower().replace("_", "-")
        for t in cls:
            if key in (t.value, t.name.lower().replace("_", "-")):
                return t
        raise ValueError(f"unknown target {text!r}")


@dataclass(frozen=True)
class BoundParams:
    d: int
    n: int
    epsilon: Fraction | None = None

    def __post_init__(self):
        if self.d < 2:
            raise DomainError(f"dimension must be >= 2, got {self.d}")
        if self.epsilon is not None:
            eps = Fraction(self.epsilon)
            if eps <= 0:
                raise DomainError(f"epsilon must be positive, got {eps}")
            object.__setattr__(self, "epsilon", eps)


class BoundFamily(enum.Enum):
    KLEE3D_U = "klee3d-u"
    KLEE3D_B = "klee3d-b"
    BARNETTE69 = "barnette69"
    BARNETTE74 = "barnette74"
    LARMAN = "larman"
    LMS = "lms"
    EISENBRAND_CLF = "eisenbrand-clf"
    KALAI_KLEITMAN = "kalai-kleitman"
    TODD = "todd"
    SK = "sk"
    SK_MINUS1 = "sk-minus1"
    POLYTOPE_SK = "polytope-sk"
    SIGMA_SK = "sigma-sk"
    BINOMIAL_U = "binomial-u"
    BINOMIAL_B = "binomial-b"
    CUBIC = "cubic"
    SUBCUBIC = "subcubic"
    ALMOST_LINEAR = "almost-linear"
    HIRSCH = "hirsch"
    HAHNLE = "hahnle"

    @classmethod
    def parse(cls, text: str) -> "BoundFamily":
        key = text.strip().lower().replace("_", "-")
        for f in cls:
            if key in (f.value, f.name.lower().replace("_", "-"), f.value.replace("-", "")):
                return f
        raise ValueError(f"unknown bound family {text!r}")

    @property
    def info(self) -> "FamilyInfo":
        return _INFO[self]

    @property
    def targets(self) -> frozenset:
        return self.info.targets

    @property
    def needs_epsilon(self) -> bool:
        return self.info.needs_epsilon

    @property
    def conjectural(self) -> bool:
        return self.info.conjectural

    @property
    def citation(self) -> str:
        return self.info.citation

    @property
    def hypothesis(self) -> str:
        return self.info.hypothesis

    @property
    def formula(self) -> str:
        return self.info.formula


@dataclass(frozen=True)
class FamilyInfo:
    targets: frozenset
    formula: str
    hypothesis: str
    citation: str
    applies: Callable[[BoundParams], bool]
    build: Callable[[BoundParams], Expr]
    needs_epsilon: bool = False
    conjectural: bool = False


# --- thresholds -------------------------------------------------------------


def _at_least_pow2(n: int, k: int) -> bool:
    """n >= 2**k, decided on exponents."""
    if k <= 0:
        return n >= 1 if k == 0 else n > 0
    return n >= 1 and floor_log2(n) >= k


def ceil_expr(e: Expr) -> int:
    """Exact ceiling of a real expression, escalating precision until pinned."""
    v = fold(e)
    if v is not None:
        return math.ceil(v)
    for p in LADDER:
        iv = eval_interval(e, p)
        lo, hi = math.ceil(iv.lo), math.ceil(iv.hi)
        if lo == hi:
            return lo
    raise Undecidable(f"cannot pin ceil({e}) within {LADDER[-1]} bits")


def almost_linear_exponent(d: int, epsilon: Fraction) -> int:
    """ceil(32 d / epsilon**2): log2 of the tail threshold for n^(1+eps)."""
    return math.ceil(Fraction(32 * d) / (Fraction(epsilon) ** 2))


def subcubic_exponent(d: int, epsilon: Fraction) -> int:
    """ceil(1 + (d-3)/(2**eps - 1)): log2 of the tail threshold for the subcubic bound."""
    if d == 3:
        return 1
    return ceil_expr(1 + IntLit(d - 3) / (Pow(2, lift(Fraction(epsilon))) - 1))


# --- family table -------------------------------------------------------------

U, B, S = Target.DELTA_U, Target.DELTA_B, Target.SIGMA


def _cubic(p: BoundParams) -> Expr:
    n = IntLit(p.n)
    return n ** 3 / (16 * sqrt(3 * log2(n) - 5))


_INFO = {
    BoundFamily.KLEE3D_U: FamilyInfo(
        frozenset({U}), "n - 3", "d = 3, n >= 3",
        "Klee, Paths on polyhedra II",
        lambda p: p.d == 3 and p.n >= 3,
        lambda p: IntLit(p.n - 3),
    ),
    BoundFamily.KLEE3D_B: FamilyInfo(
        frozenset({B}), "floor(2n/3) - 1", "d = 3, n > 3",
        "Klee, Paths on polyhedra II; tight for 3-polytopes",
        lambda p: p.d == 3 and p.n > 3,
        lambda p: IntLit(2 * p.n // 3 - 1),
    ),
    BoundFamily.BARNETTE69: FamilyInfo(
        frozenset({B}), "3^(d-2) n", "n >= d >= 4",
        "Barnette 1969",
        lambda p: p.n >= p.d >= 4,
        lambda p: IntLit(3 ** (p.d - 2) * p.n),
    ),
    BoundFamily.BARNETTE74: FamilyInfo(
        frozenset({B}), "(1/3) 2^(d-2) (n - d + 5/2)", "n >= d >= 3",
        "Barnette 1974 (exponent d-2)",
        lambda p: p.n >= p.d >= 3,
        lambda p: lift(Fraction(2 ** (p.d - 2), 3) * (p.n - p.d + Fraction(5, 2))),
    ),
    BoundFamily.LARMAN: FamilyInfo(
        frozenset({B}), "2^(d-3) n", "n >= d >= 3",
        "Larman 1970",
        lambda p: p.n >= p.d >= 3,
        lambda p: IntLit(2 ** (p.d - 3) * p.n),
    ),
    BoundFamily.LMS: FamilyInfo(
        frozenset({U, S}), "2^(d-3) n", "n >= d >= 3",
        "Labbe, Manneville, Santos 2015: normal pseudomanifolds, hence polyhedra",
        lambda p: p.n >= p.d >= 3,
        lambda p: IntLit(2 ** (p.d - 3) * p.n),
    ),
    BoundFamily.EISENBRAND_CLF: FamilyInfo(
        frozenset({U}), "2^(d-1) n", "n >= d",
        "Eisenbrand, Hahnle, Razborov, Rothvoss (connected layer families)",
        lambda p: p.n >= p.d,
        lambda p: IntLit(2 ** (p.d - 1) * p.n),
    ),
    BoundFamily.KALAI_KLEITMAN: FamilyInfo(
        frozenset({U, S}), "n^(1 + log2 d)", "n >= d",
        "Kalai, Kleitman 1992; extended to normal complexes by Eisenbrand et al.",
        lambda p: p.n >= p.d,
        lambda p: Pow(IntLit(p.n), 1 + log2(p.d)),
    ),
    BoundFamily.TODD: FamilyInfo(
        frozenset({U}), "(n - d)^(log2 d)", "n >= d",
        "Todd 2014",
        lambda p: p.n >= p.d,
        lambda p: Pow(IntLit(p.n - p.d), log2(p.d)),
    ),
    BoundFamily.SK: FamilyInfo(
        frozenset({U}), "(n - d)^(log2 (d-1))", "n >= d >= 3",
        "Sukegawa, Kitahara",
        lambda p: p.n >= p.d >= 3,
        lambda p: Pow(IntLit(p.n - p.d), log2(p.d - 1)),
    ),
    BoundFamily.SK_MINUS1: FamilyInfo(
        frozenset({U}), "(n - d - 1)^(log2 (d-1))", "d = 4 and n >= 9, or d >= 5 and n >= d + 3",
        "Sukegawa, Kitahara (refined tail bound)",
        lambda p: (p.d == 4 and p.n >= 9) or (p.d >= 5 and p.n >= p.d + 3),
        lambda p: Pow(IntLit(p.n - p.d - 1), log2(p.d - 1)),
    ),
    BoundFamily.POLYTOPE_SK: FamilyInfo(
        frozenset({B}), "(2/3 (n - d + 3/2))^(log2 (d-1))", "n > d >= 3",
        "Sukegawa-Kitahara recursion seeded with Klee's 3-polytope bound",
        lambda p: p.n > p.d >= 3,
        lambda p: Pow(lift(Fraction(2, 3) * (p.n - p.d + Fraction(3, 2))), log2(p.d - 1)),
    ),
    BoundFamily.SIGMA_SK: FamilyInfo(
        frozenset({S}), "(n - d)^(log2 d)", "n > d >= 4",
        "Sukegawa-Kitahara technique for normal pseudomanifolds without boundary",
        lambda p: p.n > p.d >= 4,
        lambda p: Pow(IntLit(p.n - p.d), log2(p.d)),
    ),
    BoundFamily.BINOMIAL_U: FamilyInfo(
        frozenset({U}), "(n - 3) C(floor(log2(n/4)) + d - 3, floor(log2(n/4)))", "n >= d >= 3",
        "iterated Kalai-Kleitman inequality with Klee's 3-dimensional bound",
        lambda p: p.n >= p.d >= 3,
        lambda p: IntLit(nested_binomial_bound(p.d, p.n, BaseRow.UNBOUNDED_KLEE)),
    ),
    BoundFamily.BINOMIAL_B: FamilyInfo(
        frozenset({B}), "(floor(2n/3) - 1) C(floor(log2(n/4)) + d - 3, floor(log2(n/4)))", "n > d >= 3",
        "iterated Kalai-Kleitman inequality with Klee's 3-polytope bound",
        lambda p: p.n > p.d >= 3,
        lambda p: IntLit(nested_binomial_bound(p.d, p.n, BaseRow.BOUNDED_KLEE)),
    ),
    BoundFamily.CUBIC: FamilyInfo(
        frozenset({U}), "n^3 / (16 sqrt(3 log2 n - 5))", "d >= 3 and n >= 2^(d-1)",
        "binomial bound with the central binomial coefficient estimate",
        lambda p: p.d >= 3 and _at_least_pow2(p.n, p.d - 1),
        _cubic,
    ),
    BoundFamily.SUBCUBIC: FamilyInfo(
        frozenset({U}), "n^(1 + 1/ln 2 + eps)", "d >= 3 and n >= 2^ceil(1 + (d-3)/(2^eps - 1))",
        "binomial bound with (e m / k)^k",
        lambda p: (
            p.epsilon is not None and p.d >= 3
            and _at_least_pow2(p.n, subcubic_exponent(p.d, p.epsilon))
        ),
        lambda p: Pow(IntLit(p.n), 1 + 1 / ln(2) + lift(p.epsilon)),
        needs_epsilon=True,
    ),
    BoundFamily.ALMOST_LINEAR: FamilyInfo(
        frozenset({U}), "n^(1 + eps)", "d >= 3 and n >= 2^ceil(32 d / eps^2)",
        "binomial bound near the edge of Pascal's triangle",
        lambda p: (
            p.epsilon is not None and p.d >= 3
            and _at_least_pow2(p.n, almost_linear_exponent(p.d, p.epsilon))
        ),
        lambda p: Pow(IntLit(p.n), 1 + lift(p.epsilon)),
        needs_epsilon=True,
    ),
    BoundFamily.HIRSCH: FamilyInfo(
        frozenset({B}), "n - d", "n > d (disproved in general; holds for n - d <= 6)",
        "Hirsch conjecture (Santos counterexample); Bremner et al. for n - d <= 6",
        lambda p: p.n > p.d,
        lambda p: IntLit(p.n - p.d),
        conjectural=True,
    ),
    BoundFamily.HAHNLE: FamilyInfo(
        frozenset({U}), "d (n - 1)", "n >= d",
        "Hahnle's conjecture",
        lambda p: p.n >= p.d,
        lambda p: IntLit(p.d * (p.n - 1)),
        conjectural=True,
    ),
}


def bounds_target(family: BoundFamily, target: Target) -> bool:
    """Whether the family bounds ``target``; polyhedron bounds cover polytopes."""
    if target in family.targets:
        return True
    return target is Target.DELTA_B and Target.DELTA_U in family.targets


def bound_applies(family: BoundFamily, p: BoundParams) -> bool:
    if family.needs_epsilon and p.epsilon is None:
        return False
    return bool(family.info.applies(p))


def bound_value(family: BoundFamily, p: BoundParams) -> Expr:
    if not bound_applies(family, p):
        raise NotApplicable(
            f"{family.value} needs {family.hypothesis}; got d={p.d}, n={p.n}"
            + (f", eps={p.epsilon}" if p.epsilon is not None else "")
        )
    return family.info.build(p)


def applicable_families(target: Target, p: BoundParams, include_conjectures: bool = False):
    if target is Target.DELTA_B and not p.n > p.d:
        return []
    return [
        f for f in BoundFamily
        if bounds_target(f, target)
        and (include_conjectures or not f.conjectural)
        and bound_applies(f, p)
    ]


@dataclass(frozen=True)
class BestBound:
    family: BoundFamily
    value: Expr
    conjectures: tuple = ()


def best_bound(target: Target, p: BoundParams) -> BestBound:
    """Smallest applicable proven bound, each step decided by :func:`compare`.

    Ties keep the earlier catalog entry. Conjectural families are reported in
    ``conjectures`` but never selected.
    """
    candidates = applicable_families(target, p)
    if not candidates:
        raise NotApplicable(f"no catalog bound applies to {target.value} at d={p.d}, n={p.n}")
    best, best_val = candidates[0], bound_value(candidates[0], p)
    for fam in candidates[1:]:
        val = bound_value(fam, p)
        c = compare(val, best_val)
        if c.ordering is Ordering3.UNDECIDED:
            raise Undecidable(
                f"cannot order {fam.value} against {best.value} at d={p.d}, n={p.n}"
            )
        if c.ordering is Ordering3.LESS:
            best, best_val = fam, val
    conj = tuple(
        (f, bound_value(f, p))
        for f in BoundFamily
        if f.conjectural and bounds_target(f, target) and bound_applies(f, p)
    )
    return BestBound(best, best_val, conj)


def catalog_records() -> list[dict]:
    return [
        {
            "id": f.value,
            "targets": sorted(t.value for t in f.targets),
            "formula": f.formula,
            "hypothesis": f.hypothesis,
            "needs_epsilon": f.needs_epsilon,
            "conjectural": f.conjectural,
            "citation": f.citation,
        }
        for f in BoundFamily
    ]


def catalog_json() -> str:
    return json.dumps(catalog_records(), indent=2)

"""Compare true diameters of small instances with every applicable bound."""

from __future__ import annotations

from ..bounds import BoundFamily, BoundParams, Target, applicable_families, bound_value
from ..exact import compare
from ..tables import SequenceKind, eval_sequence
from ..verify.report import VerificationReport, Verdict, verdict_le
from .complex import PureComplex, complex_predicates, dual_diameter
from .polytope import HPolytope, polytope_diameter

_TILDE = {
    Target.DELTA_U: SequenceKind.DELTA_TILDE_U,
    Target.DELTA_B: SequenceKind.DELTA_TILDE_B,
    Target.SIGMA: SequenceKind.SIGMA_TILDE,
}

# families that need only normality; the rest of the sigma catalog also
# needs the pseudomanifold-without-boundary property
_NORMAL_ONLY = frozenset({BoundFamily.KALAI_KLEITMAN})


def instance_parameters(instance) -> tuple[int, int, int]:
    """(diameter, d, n): n counts facets of a polytope, vertex labels of a complex."""
    if isinstance(instance, HPolytope):
        return polytope_diameter(instance), instance.d, instance.facet_count
    if isinstance(instance, PureComplex):
        return dual_diameter(instance), instance.d, instance.n
    raise TypeError(f"cannot cross-check {type(instance).__name__}")


def cross_check(instance, target: Target | str | None = None, name: str = "instance",
                include_conjectures: bool = False) -> VerificationReport:
    if isinstance(target, str):
        target = Target.parse(target)
    is_complex = isinstance(instance, PureComplex)
    if target is None:
        target = Target.SIGMA if is_complex else Target.DELTA_B
    if is_complex != (target is Target.SIGMA):
        raise ValueError(f"target {target.value} does not match a {type(instance).__name__}")

    diam, d, n = instance_parameters(instance)
    rep = VerificationReport(f"cross-check {name}")
    base = {"d": d, "n": n, "instance": name}

    gate = None
    if is_complex:
        pred = complex_predicates(instance)
        if not pred.is_normal:
            gate = frozenset()
        elif not pred.is_pseudomanifold_without_boundary:
            gate = _NORMAL_ONLY

    families = []
    if d >= 2:
        families = applicable_families(target, BoundParams(d, n), include_conjectures)
    for fam in families:
        if gate is not None and fam not in gate:
            continue
        value = bound_value(fam, BoundParams(d, n))
        rep.add({**base, "bound": fam.value}, diam, value, verdict_le(compare(diam, value)))

    kind = _TILDE[target]
    tilde_ok = kind.in_domain(d, n) and (target is not Target.DELTA_B or n > d)
    if tilde_ok and (gate is None):
        tilde = eval_sequence(kind, d, n)
        rep.add({**base, "bound": f"tilde-{kind.value}"}, diam, tilde,
                Verdict.PASS if diam <= tilde else Verdict.FAIL)
    return rep

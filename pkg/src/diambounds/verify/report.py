"""Verification reports: per-case verdicts with JSON and text renderings."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

from ..exact import Comparison, Expr, Ordering3, eval_interval, fold, lift


class Verdict(enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"
    UNDECIDED = "Undecided"

    @property
    def word(self) -> str:
        return {"Pass": "Passed", "Fail": "Failed", "Undecided": "Undecided"}[self.value]


def verdict_le(c: Comparison) -> Verdict:
    """Verdict for a claimed lhs <= rhs."""
    if c.ordering is Ordering3.UNDECIDED:
        return Verdict.UNDECIDED
    return Verdict.PASS if c.le else Verdict.FAIL


def verdict_ge(c: Comparison) -> Verdict:
    if c.ordering is Ordering3.UNDECIDED:
        return Verdict.UNDECIDED
    return Verdict.PASS if c.ge else Verdict.FAIL


def render(value) -> str:
    """Exact value when it folds, otherwise the expression and a 64-bit estimate."""
    if isinstance(value, (int, str)):
        return str(value)
    e = lift(value)
    v = fold(e)
    if v is not None:
        return str(v)
    iv = eval_interval(e, 64)
    return f"{e} ~ {float(iv.midpoint()):.10g}"


@dataclass
class Case:
    params: dict
    lhs: str
    rhs: str
    verdict: Verdict
    note: str = ""

    def to_dict(self) -> dict:
        out = {"params": self.params, "lhs": self.lhs, "rhs": self.rhs,
               "verdict": self.verdict.value}
        if self.note:
            out["note"] = self.note
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Case":
        return cls(dict(data["params"]), data["lhs"], data["rhs"],
                   Verdict(data["verdict"]), data.get("note", ""))

    def line(self) -> str:
        keys = list(self.params)
        if keys[:2] == ["d", "n"]:
            head = f"{self.params['d']}, {self.params['n']}"
            rest = keys[2:]
        else:
            head, rest = "", keys
        extra = ", ".join(f"{k}={self.params[k]}" for k in rest)
        body = ", ".join(x for x in (head, extra) if x)
        tail = f": {self.lhs} <= {self.rhs}" if rest or self.note else ""
        if self.note:
            tail += f" ({self.note})"
        return f"{self.verdict.word} {body}{tail}"


@dataclass
class VerificationReport:
    suite: str
    cases: list = field(default_factory=list)

    def add(self, params: dict, lhs, rhs, verdict: Verdict, note: str = "") -> Case:
        case = Case(params, render(lhs), render(rhs), verdict, note)
        self.cases.append(case)
        return case

    def extend(self, other: "VerificationReport") -> None:
        self.cases.extend(other.cases)

    @property
    def summary(self) -> dict:
        counts = {v.value: 0 for v in Verdict}
        for c in self.cases:
            counts[c.verdict.value] += 1
        counts["total"] = len(self.cases)
        return counts

    @property
    def ok(self) -> bool:
        return all(c.verdict is Verdict.PASS for c in self.cases)

    @property
    def failed(self) -> bool:
        return any(c.verdict is Verdict.FAIL for c in self.cases)

    @property
    def undecided(self) -> bool:
        return any(c.verdict is Verdict.UNDECIDED for c in self.cases)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "summary": self.summary,
                "cases": [c.to_dict() for c in self.cases]}

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        rep = cls(data["suite"], [Case.from_dict(c) for c in data["cases"]])
        if "summary" in data and data["summary"] != rep.summary:
            raise ValueError("report summary does not match its cases")
        return rep

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [c.line() for c in self.cases]
        s = self.summary
        lines.append(
            f"# {self.suite}: {s['Pass']} passed, {s['Fail']} failed, "
            f"{s['Undecided']} undecided of {s['total']}"
        )
        return "\n".join(lines) + "\n"

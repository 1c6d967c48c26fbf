"""Memoized exact tables of the three Kalai-Kleitman-type recursive sequences.

Each sequence is defined for n >= d >= base dimension by four cases:

* base row at d = base dimension (n - 3, floor(2n/3) - 1 or floor(n/2)),
* zero on the diagonal n = d above the base row,
* dimension reduction value(d-1, n-1) when n < 2d,
* value(d-1, n-1) + 2 value(d, floor(n/2)) + 2 when n >= 2d.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass, field

from .errors import DomainError


class SequenceKind(enum.Enum):
    DELTA_TILDE_U = "delta-u"
    DELTA_TILDE_B = "delta-b"
    SIGMA_TILDE = "sigma"

    @property
    def base_dim(self) -> int:
        return 2 if self is SequenceKind.SIGMA_TILDE else 3

    def base_row(self, n: int) -> int:
        if self is SequenceKind.DELTA_TILDE_U:
            return n - 3
        if self is SequenceKind.DELTA_TILDE_B:
            return 2 * n // 3 - 1
        return n // 2

    def in_domain(self, d: int, n: int) -> bool:
        return n >= d >= self.base_dim

    @classmethod
    def parse(cls, text: str) -> "SequenceKind":
        aliases = {
            "delta-u": cls.DELTA_TILDE_U, "u": cls.DELTA_TILDE_U,
            "delta-b": cls.DELTA_TILDE_B, "b": cls.DELTA_TILDE_B,
            "sigma": cls.SIGMA_TILDE, "s": cls.SIGMA_TILDE,
        }
        try:
            return aliases[text.strip().lower()]
        except KeyError:
            raise ValueError(f"unknown sequence kind {text!r}") from None


class RecursionTable:
    """Append-only memo for one sequence kind.

    Concurrent writers may race on the same key; they always store the same
    value, so a plain dict is enough under the GIL.
    """

    def __init__(self, kind: SequenceKind):
        self.kind = kind
        self.memo: dict[tuple[int, int], int] = {}

    def __len__(self):
        return len(self.memo)

    def value(self, d: int, n: int) -> int:
        kind = self.kind
        if not kind.in_domain(d, n):
            raise DomainError(
                f"{kind.value}: (d={d}, n={n}) outside n >= d >= {kind.base_dim}"
            )
        return self._value(d, n)

    def _value(self, d: int, n: int) -> int:
        key = (d, n)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        base = self.kind.base_dim
        if d == base:
            v = self.kind.base_row(n)
        elif n == d:
            v = 0
        elif n < 2 * d:
            v = self._value(d - 1, n - 1)
        else:
            v = self._value(d - 1, n - 1) + 2 * self._value(d, n // 2) + 2
        self.memo[key] = v
        return v


_TABLES = {kind: RecursionTable(kind) for kind in SequenceKind}


def table_for(kind: SequenceKind) -> RecursionTable:
    return _TABLES[kind]


def eval_sequence(kind: SequenceKind, d: int, n: int) -> int:
    return _TABLES[kind].value(d, n)


@dataclass
class Grid:
    """Values of one sequence over base_dim <= d <= d_max, base_dim <= n <= n_max.

    Cells with n < d are outside the domain and read back as None.
    """

    kind: SequenceKind
    d_max: int
    n_max: int
    values: dict = field(default_factory=dict)

    @property
    def d_range(self) -> range:
        return range(self.kind.base_dim, self.d_max + 1)

    @property
    def n_range(self) -> range:
        return range(self.kind.base_dim, self.n_max + 1)

    def cell(self, d: int, n: int) -> int | None:
        return self.values.get((d, n))

    def __iter__(self):
        # outer d, inner n
        for d in self.d_range:
            for n in self.n_range:
                v = self.values.get((d, n))
                if v is not None:
                    yield d, n, v

    def matrix(self) -> list[list[int | None]]:
        return [[self.cell(d, n) for n in self.n_range] for d in self.d_range]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["d", "n", "value"])
        w.writerows(self)
        return buf.getvalue()

    def to_records(self) -> list[dict]:
        return [{"d": d, "n": n, "value": v} for d, n, v in self]

    def to_json(self) -> str:
        return json.dumps(self.to_records(), separators=(",", ":"))

    def to_markdown(self) -> str:
        ns = list(self.n_range)
        lines = ["| d \\ n | " + " | ".join(map(str, ns)) + " |"]
        lines.append("|---" * (len(ns) + 1) + "|")
        for d, row in zip(self.d_range, self.matrix()):
            cells = ["" if v is None else str(v) for v in row]
            lines.append(f"| {d} | " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        ns = list(self.n_range)
        rows = [["d\\n"] + [str(n) for n in ns]]
        for d, row in zip(self.d_range, self.matrix()):
            rows.append([str(d)] + ["." if v is None else str(v) for v in row])
        width = max(len(c) for r in rows for c in r)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in rows) + "\n"

    @classmethod
    def from_records(cls, kind: SequenceKind, records) -> "Grid":
        values = {(int(r["d"]), int(r["n"])): int(r["value"]) for r in records}
        d_max = max((d for d, _ in values), default=kind.base_dim)
        n_max = max((n for _, n in values), default=kind.base_dim)
        return cls(kind, d_max, n_max, values)


def table_grid(kind: SequenceKind, d_max: int, n_max: int) -> Grid:
    base = kind.base_dim
    if d_max < base or n_max < base:
        raise DomainError(
            f"{kind.value}: limits (d_max={d_max}, n_max={n_max}) below base dimension {base}"
        )
    table = _TABLES[kind]
    values = {}
    for d in range(base, d_max + 1):
        for n in range(d, n_max + 1):
            values[d, n] = table.value(d, n)
    return Grid(kind, d_max, n_max, values)

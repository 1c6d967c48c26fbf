"""Text formats for H-representations and pure complexes.

H-rep: header ``d m``, then m rows ``a1 ... ad b`` meaning a.x <= b.
Complex: header ``d n``, then one facet per row as d labels in 0..n-1.
Rationals are integers or ``p/q``; ``#`` starts a comment.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from ..errors import DomainError, ParseError
from .complex import PureComplex
from .polytope import HPolytope


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].split()
        if body:
            yield no, body


def _header(lines, what: str) -> tuple[int, int, int]:
    try:
        no, toks = next(lines)
    except StopIteration:
        raise ParseError(f"empty {what} file") from None
    if len(toks) != 2:
        raise ParseError(f"header must be two integers, got {' '.join(toks)!r}", no)
    try:
        a, b = int(toks[0]), int(toks[1])
    except ValueError:
        raise ParseError(f"header must be two integers, got {' '.join(toks)!r}", no) from None
    if a < 1 or b < 0:
        raise ParseError(f"header values out of range: {a} {b}", no)
    return no, a, b


def _rational(tok: str, no: int) -> Fraction:
    if tok.count("/") > 1:
        raise ParseError(f"bad rational {tok!r}", no)
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {tok!r}", no) from None


def parse_hrep(text: str) -> HPolytope:
    lines = _lines(text)
    _, d, m = _header(lines, "H-representation")
    rows = []
    last = 0
    for no, toks in lines:
        last = no
        if len(rows) == m:
            raise ParseError(f"more than the {m} halfspaces declared", no)
        if len(toks) != d + 1:
            raise ParseError(f"expected {d + 1} numbers (a1..a{d} b), got {len(toks)}", no)
        rows.append([_rational(t, no) for t in toks])
    if len(rows) != m:
        raise ParseError(f"declared {m} halfspaces, found {len(rows)}", last or None)
    return HPolytope(d, tuple((r[:-1], r[-1]) for r in rows))


def parse_complex(text: str) -> PureComplex:
    lines = _lines(text)
    _, d, n = _header(lines, "complex")
    facets, seen = [], {}
    for no, toks in lines:
        if len(toks) != d:
            raise ParseError(f"facet has {len(toks)} labels, expected {d}", no)
        try:
            labels = [int(t) for t in toks]
        except ValueError:
            raise ParseError(f"labels must be integers: {' '.join(toks)!r}", no) from None
        if any(not 0 <= v < n for v in labels):
            raise ParseError(f"label outside 0..{n - 1}", no)
        f = frozenset(labels)
        if len(f) != d:
            raise ParseError("repeated label within a facet", no)
        if f in seen:
            raise ParseError(f"duplicate of the facet on line {seen[f]}", no)
        seen[f] = no
        facets.append(f)
    try:
        return PureComplex(d, n, tuple(facets))
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_hrep(P: HPolytope, comments: tuple = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"{P.d} {P.m}")
    for a, b in P.halfspaces:
        out.append(" ".join(_fmt(x) for x in (*a, b)))
    return "\n".join(out) + "\n"


def format_complex(C: PureComplex, comments: tuple = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"{C.d} {C.n}")
    for f in C.facets:
        out.append(" ".join(map(str, sorted(f))))
    return "\n".join(out) + "\n"


def load(path, mode: str):
    text = Path(path).read_text()
    if mode == "polytope":
        return parse_hrep(text)
    if mode == "complex":
        return parse_complex(text)
    raise ValueError(f"unknown mode {mode!r}")

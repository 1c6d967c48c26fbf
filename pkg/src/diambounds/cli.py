"""Command-line front end: ``diambounds {table,bound,best,verify,diameter,catalog}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from fractions import Fraction

from . import __version__
from .bounds import (
    BoundFamily,
    BoundParams,
    Target,
    applicable_families,
    best_bound,
    bound_value,
    catalog_records,
)
from .errors import DiamBoundsError
from .exact import MAX_PRECISION, Expr, eval_interval, fold, lift
from .tables import SequenceKind, table_grid

DEFAULT_PRECISION = 128
MIN_PRECISION = 16
FORMATS = ("csv", "json", "markdown", "text")

EXIT_OK, EXIT_FAIL, EXIT_UNDECIDED, EXIT_ERROR = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_count(text: str) -> int:
    """Decimal integer or ``b^k`` (e.g. ``2^24``)."""
    s = text.strip().replace(" ", "")
    m = re.fullmatch(r"(\d+)\^(\d+)", s)
    if m:
        return int(m.group(1)) ** int(m.group(2))
    if re.fullmatch(r"\d+", s):
        return int(s)
    raise argparse.ArgumentTypeError(f"expected an integer or b^k, got {text!r}")


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational such as 1/2, got {text!r}") from None


def resolve_precision(arg: int | None) -> int:
    if arg is None:
        env = os.environ.get("DIAMBOUNDS_PRECISION")
        if env:
            try:
                arg = int(env)
            except ValueError:
                raise UsageError(f"DIAMBOUNDS_PRECISION must be an integer, got {env!r}") from None
        else:
            arg = DEFAULT_PRECISION
    if not MIN_PRECISION <= arg <= MAX_PRECISION:
        raise UsageError(f"precision must be between {MIN_PRECISION} and {MAX_PRECISION} bits, got {arg}")
    return arg


# --- rendering --------------------------------------------------------------


def _decimal(q: Fraction, digits: int, up: bool) -> str:
    """q rounded outward to ``digits`` significant decimals."""
    if q == 0:
        return "0"
    neg = q < 0
    a = -q if neg else q
    e = len(str(a.numerator)) - len(str(a.denominator))
    if Fraction(10) ** e > a:
        e -= 1
    scale = Fraction(10) ** (digits - 1 - e)
    t = a * scale
    away = up != neg
    k = -(-t.numerator // t.denominator) if away else t.numerator // t.denominator
    s = str(k)
    if len(s) > digits:
        e += 1
        s = s[:digits]
    mant = s[0] + ("." + s[1:].rstrip("0") if s[1:].rstrip("0") else "")
    body = mant if e == 0 else f"{mant}e{e}"
    return ("-" if neg else "") + body


def value_record(expr: Expr, precision: int) -> dict:
    """Exact value when the expression folds, else a certified enclosure."""
    e = lift(expr)
    v = fold(e)
    if v is not None:
        return {"exact": True, "value": str(v), "expression": str(e)}
    iv = eval_interval(e, precision)
    digits = max(3, int(precision * 0.30103) - 1)
    return {
        "exact": False,
        "expression": str(e),
        "precision_bits": precision,
        "lower": _decimal(iv.lo, digits, up=False),
        "upper": _decimal(iv.hi, digits, up=True),
    }


def _value_text(rec: dict) -> str:
    if rec["exact"]:
        return rec["value"]
    return f"[{rec['lower']}, {rec['upper']}]"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _markdown(header, rows) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(str(c) for c in r) + " |" for r in rows]
    return "\n".join(lines) + "\n"


def _keyvals(pairs) -> str:
    return "".join(f"{k}: {v}\n" for k, v in pairs)


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


# --- commands ---------------------------------------------------------------


def cmd_table(args) -> int:
    kind = SequenceKind.parse(args.kind)
    grid = table_grid(kind, args.d_max, args.n_max)
    fmt = args.format or "text"
    if fmt == "csv":
        _emit(grid.to_csv())
    elif fmt == "json":
        _emit(grid.to_json())
    elif fmt == "markdown":
        _emit(grid.to_markdown())
    else:
        _emit(grid.to_text())
    return EXIT_OK


def _params(args) -> BoundParams:
    return BoundParams(args.d, args.n, args.eps)


def cmd_bound(args) -> int:
    fam = BoundFamily.parse(args.family)
    p = _params(args)
    precision = resolve_precision(args.precision)
    rec = {
        "family": fam.value,
        "d": p.d,
        "n": str(p.n),
        **({"epsilon": str(p.epsilon)} if p.epsilon is not None else {}),
        "formula": fam.formula,
        **value_record(bound_value(fam, p), precision),
        "citation": fam.citation,
    }
    fmt = args.format or "text"
    if fmt == "json":
        _emit(json.dumps(rec, indent=2))
    elif fmt in ("csv", "markdown"):
        header = list(rec)
        row = [rec[k] for k in header]
        _emit(_csv(header, [row]) if fmt == "csv" else _markdown(header, [row]))
    else:
        pairs = [("family", fam.value), ("formula", fam.formula), ("d", p.d), ("n", p.n)]
        if p.epsilon is not None:
            pairs.append(("epsilon", p.epsilon))
        if rec["exact"]:
            pairs.append(("value", rec["value"]))
        else:
            pairs.append(("expression", rec["expression"]))
            pairs.append((f"enclosure ({precision} bits)", _value_text(rec)))
        pairs.append(("citation", fam.citation))
        _emit(_keyvals(pairs))
    return EXIT_OK


def cmd_best(args) -> int:
    target = Target.parse(args.target)
    p = _params(args)
    precision = resolve_precision(args.precision)
    best = best_bound(target, p)
    candidates = []
    for fam in applicable_families(target, p, include_conjectures=True):
        candidates.append({
            "family": fam.value,
            "conjectural": fam.conjectural,
            **value_record(bound_value(fam, p), precision),
        })
    doc = {
        "target": target.value,
        "d": p.d,
        "n": str(p.n),
        **({"epsilon": str(p.epsilon)} if p.epsilon is not None else {}),
        "best": best.family.value,
        "best_value": value_record(best.value, precision),
        "citation": best.family.citation,
        "candidates": candidates,
    }
    fmt = args.format or "text"
    if fmt == "json":
        _emit(json.dumps(doc, indent=2))
        return EXIT_OK
    header = ["family", "conjectural", "value"]
    rows = [[c["family"], str(c["conjectural"]).lower(), _value_text(c)] for c in candidates]
    if fmt == "csv":
        _emit(_csv(header, rows))
    elif fmt == "markdown":
        _emit(f"best: **{best.family.value}**\n\n" + _markdown(header, rows))
    else:
        lines = [
            f"target: {target.value}",
            f"best: {best.family.value} = {_value_text(doc['best_value'])}",
            f"citation: {best.family.citation}",
            "candidates:",
        ]
        for c in candidates:
            tag = " (conjecture)" if c["conjectural"] else ""
            lines.append(f"  {c['family']}: {_value_text(c)}{tag}")
        _emit("\n".join(lines))
    return EXIT_OK


def _report_rows(reports):
    rows = []
    for rep in reports:
        for c in rep.cases:
            params = ";".join(f"{k}={v}" for k, v in c.params.items())
            rows.append([rep.suite, params, c.lhs, c.rhs, c.verdict.value, c.note])
    return ["suite", "params", "lhs", "rhs", "verdict", "note"], rows


def _render_reports(reports, fmt: str, extra: dict | None = None) -> str:
    if fmt == "json":
        total = {"Pass": 0, "Fail": 0, "Undecided": 0, "total": 0}
        for rep in reports:
            for k, v in rep.summary.items():
                total[k] += v
        doc = {**(extra or {}), "summary": total, "reports": [r.to_dict() for r in reports]}
        return json.dumps(doc, indent=2)
    if fmt in ("csv", "markdown"):
        header, rows = _report_rows(reports)
        return _csv(header, rows) if fmt == "csv" else _markdown(header, rows)
    return "".join(r.to_text() for r in reports)


def _exit_for(reports) -> int:
    if any(r.failed for r in reports):
        return EXIT_FAIL
    if any(r.undecided for r in reports):
        return EXIT_UNDECIDED
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_suite

    reports = run_suite(args.suite)
    _emit(_render_reports(reports, args.format or "text"))
    return _exit_for(reports)


def cmd_diameter(args) -> int:
    from .geometry import complex_predicates, cross_check, load
    from .geometry.crosscheck import instance_parameters

    inst = load(args.input, args.mode)
    diam, d, n = instance_parameters(inst)
    report = cross_check(inst, args.target, name=os.path.basename(args.input))
    info = {"mode": args.mode, "diameter": diam, "d": d, "n": n}
    if args.mode == "complex":
        info["predicates"] = complex_predicates(inst).to_dict()
    fmt = args.format or "text"
    if fmt == "json":
        _emit(_render_reports([report], fmt, info))
    elif fmt in ("csv", "markdown"):
        _emit(_render_reports([report], fmt))
    else:
        pairs = [("diameter", diam), ("d", d), ("n", n)]
        for k, v in info.get("predicates", {}).items():
            pairs.append((k, str(v).lower()))
        _emit(_keyvals(pairs) + report.to_text())
    return _exit_for([report])


def cmd_catalog(args) -> int:
    recs = catalog_records()
    fmt = args.format or "text"
    if fmt == "json":
        _emit(json.dumps(recs, indent=2))
        return EXIT_OK
    header = ["id", "targets", "formula", "hypothesis", "conjectural"]
    rows = [[r["id"], " ".join(r["targets"]), r["formula"], r["hypothesis"],
             str(r["conjectural"]).lower()] for r in recs]
    if fmt == "csv":
        _emit(_csv(header, rows))
    elif fmt == "markdown":
        _emit(_markdown(header, rows))
    else:
        _emit("\n".join(f"{r[0]:15} {r[1]:18} {r[2]}  [{r[3]}]" for r in rows))
    return EXIT_OK


# --- argument parsing -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="diambounds", description=__doc__)
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=FORMATS, default=None)
        sp.set_defaults(func=func)
        return sp

    t = add("table", cmd_table, "print a grid of one recursive sequence")
    t.add_argument("--kind", required=True, help="delta-u, delta-b or sigma")
    t.add_argument("--d-max", type=int, required=True)
    t.add_argument("--n-max", type=int, required=True)

    for name, func, help_ in (("bound", cmd_bound, "evaluate one bound family"),
                              ("best", cmd_best, "smallest applicable proven bound")):
        b = add(name, func, help_)
        if name == "bound":
            b.add_argument("--family", required=True)
        else:
            b.add_argument("--target", required=True, help="delta-u, delta-b or sigma")
        b.add_argument("--d", type=int, required=True)
        b.add_argument("--n", type=parse_count, required=True, help="integer or b^k")
        b.add_argument("--eps", type=parse_rational, default=None)
        b.add_argument("--precision", type=int, default=None,
                       help=f"enclosure bits (default {DEFAULT_PRECISION} or $DIAMBOUNDS_PRECISION)")

    v = add("verify", cmd_verify, "run a verification suite")
    v.add_argument("--suite", required=True,
                   choices=("appendix-a1", "appendix-a2", "appendix-a3", "induction",
                            "index-swap", "known-values", "all"))

    g = add("diameter", cmd_diameter, "true diameter of an instance file plus bound cross-check")
    g.add_argument("input")
    g.add_argument("--mode", choices=("polytope", "complex"), default="polytope")
    g.add_argument("--target", default=None, help="delta-u or delta-b for polytopes")

    add("catalog", cmd_catalog, "list the bound families")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DiamBoundsError, UsageError, ValueError, OSError) as exc:
        print(f"diambounds {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

    mobius-hosoya poly    --m 10 [--n 3] [--method bfs|closed|blocks] [--format text|json|csv]
    mobius-hosoya indices --m 10 [--source polynomial|closed|both] [--format ...]
    mobius-hosoya verify  --m-min 4 --m-max 61 [--strict] [--format ...]
    mobius-hosoya graph   --m 7 [--n 2] [--format text|json|csv|dot]

JSON and CSV output is byte-deterministic; rationals are written as "p/q".
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from .closed_forms import hosoya_coeffs_closed, indices_closed
from .graph_core import hosoya_from_distances, hosoya_polynomial
from .ladder import LadderSpec, assemble_block_distance_matrix, build_ladder
from .polynomial import INDEX_NAMES, IndexReport, format_polynomial, format_rational, indices_from_polynomial
from .verify import KNOWN_DISCREPANCIES, Status, VerificationReport, sweep

PROG = "mobius-hosoya"
FORMATS = ("text", "json", "csv", "dot")
SHORT_NAMES = {"wiener": "W", "hyper_wiener": "WW", "harary": "Ha", "tsz": "TSZ"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # one-line diagnostics only
        print(f"{PROG}: error: {message}", file=sys.stderr)
        sys.exit(2)


def _json(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _text_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{format_rational(x)} (~{float(x):.6g})"


def _plain(value: Any) -> Any:
    """JSON-safe rendering of a check value."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _flat(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, (list, tuple)):
        return " ".join(_flat(v) for v in value)
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(value)


def _require_format(fmt: str, allowed: Sequence[str]) -> None:
    if fmt not in allowed:
        raise UsageError(f"format '{fmt}' is not available here (choose from {', '.join(allowed)})")


def cmd_poly(m: int, n: int, method: str, fmt: str) -> str:
    _require_format(fmt, ("text", "json", "csv"))
    if method in ("closed", "blocks") and n != 3:
        raise UsageError(f"method '{method}' requires n = 3")
    if method == "bfs":
        p = hosoya_polynomial(build_ladder(LadderSpec(m, n)))
    elif method == "closed":
        if m < 4:
            raise UsageError("method 'closed' requires m >= 4")
        p = hosoya_coeffs_closed(m)
    else:
        if m < 6:
            raise UsageError("method 'blocks' requires m >= 6")
        p = hosoya_from_distances(assemble_block_distance_matrix(m))
    if fmt == "json":
        coeffs = {str(k): c for k, c in p.items()}
        return _json({"m": m, "n": n, "method": method, "coefficients": coeffs})
    if fmt == "csv":
        return _csv(("k", "coefficient"), list(p.items()))
    return format_polynomial(p) + "\n"


def _indices(m: int, source: str) -> IndexReport:
    if source == "closed":
        if m < 6:
            raise UsageError("closed-form indices require m >= 6")
        return indices_closed(m)
    return indices_from_polynomial(hosoya_polynomial(build_ladder(LadderSpec(m, 3))))


def cmd_indices(m: int, source: str, fmt: str) -> str:
    _require_format(fmt, ("text", "json", "csv"))
    if source != "both":
        values = _indices(m, source).as_dict()
        if fmt == "json":
            rendered = {name: format_rational(v) for name, v in values.items()}
            return _json({"m": m, "source": source, "indices": rendered})
        if fmt == "csv":
            return _csv(("index", "value"), [(n, format_rational(v)) for n, v in values.items()])
        return "".join(f"{SHORT_NAMES[n]:<4}= {_text_rational(v)}\n" for n, v in values.items())

    poly = _indices(m, "polynomial").as_dict()
    closed = _indices(m, "closed").as_dict()
    rows = []
    for name in INDEX_NAMES:
        known = f"indices.{name}" in KNOWN_DISCREPANCIES
        rows.append((name, poly[name], closed[name], poly[name] == closed[name], known))
    if fmt == "json":
        out = {
            name: {
                "polynomial": format_rational(p),
                "closed": format_rational(c),
                "match": ok,
                "known_discrepancy": known,
            }
            for name, p, c, ok, known in rows
        }
        return _json({"m": m, "source": "both", "indices": out})
    if fmt == "csv":
        return _csv(
            ("index", "polynomial", "closed", "match", "known_discrepancy"),
            [(n, format_rational(p), format_rational(c), ok, known) for n, p, c, ok, known in rows],
        )
    lines = []
    for name, p, c, ok, known in rows:
        flag = "match" if ok else "MISMATCH" + (" (known discrepancy)" if known else "")
        lines.append(
            f"{SHORT_NAMES[name]:<4} polynomial={_text_rational(p)}  closed={_text_rational(c)}  {flag}\n"
        )
    return "".join(lines)


def _render_reports(reports: list[VerificationReport], fmt: str) -> str:
    if fmt == "json":
        return _json(
            [
                {
                    "m": r.m,
                    "overall": r.overall.value,
                    "checks": [
                        {
                            "name": c.name,
                            "status": c.status.value,
                            "expected": _plain(c.expected),
                            "actual": _plain(c.actual),
                            "known_discrepancy": c.known,
                            "detail": c.detail,
                        }
                        for c in r.checks
                    ],
                }
                for r in reports
            ]
        )
    if fmt == "csv":
        rows = [
            (r.m, c.name, c.status.value, _flat(c.expected), _flat(c.actual), c.known, c.detail)
            for r in reports
            for c in r.checks
        ]
        return _csv(("m", "check", "status", "expected", "actual", "known_discrepancy", "detail"), rows)
    lines = []
    for r in reports:
        lines.append(f"m={r.m}: {r.overall.value}")
        for c in r.checks:
            line = f"  [{c.status.value:<8}] {c.name}"
            if c.status is Status.MISMATCH:
                line += f": expected {_flat(c.expected)}, got {_flat(c.actual)}"
                if c.known:
                    line += " (known discrepancy)"
            if c.detail and c.status is not Status.MATCH:
                line += f" -- {c.detail}"
            lines.append(line)
    unexpected = sum(len(r.unexpected_mismatches()) for r in reports)
    known = sum(len(r.mismatches()) for r in reports) - unexpected
    lines.append(f"{len(reports)} report(s); {known} known discrepancies, {unexpected} unexpected mismatches")
    return "\n".join(lines) + "\n"


def cmd_verify(m_min: int, m_max: int, strict: bool, fmt: str) -> tuple[str, int]:
    _require_format(fmt, ("text", "json", "csv"))
    if not 4 <= m_min <= m_max:
        raise UsageError(f"need 4 <= m-min <= m-max, got {m_min}..{m_max}")
    reports = sweep(m_min, m_max)
    code = 0
    if strict and any(r.unexpected_mismatches() for r in reports):
        code = 1
    return _render_reports(reports, fmt), code


def cmd_graph(m: int, n: int, fmt: str) -> str:
    spec = LadderSpec(m, n)
    g = build_ladder(spec)
    edges = g.edges()
    if fmt == "json":
        return _json({"m": m, "n": n, "vertices": g.vertex_count, "edges": [list(e) for e in edges]})
    if fmt == "csv":
        return _csv(("u", "v"), edges)
    if fmt == "dot":
        lines = [f"graph M_{m}_{n} {{"]
        lines += [f'  {v} [label="({i},{j})"];' for v in range(g.vertex_count) for i, j in [spec.label(v)]]
        lines += [f"  {u} -- {v};" for u, v in edges]
        lines.append("}")
        return "\n".join(lines) + "\n"
    lines = [f"M({m},{n}): {g.vertex_count} vertices, {g.edge_count} edges"]
    lines += [f"{spec.label(u)} -- {spec.label(v)}" for u, v in edges]
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROG, description="Hosoya polynomials and distance indices of generalized Möbius ladders")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt_arg(p):
        p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("poly", help="Hosoya polynomial of M(m, n)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--method", choices=("bfs", "closed", "blocks"), default="bfs")
    fmt_arg(p)

    p = sub.add_parser("indices", help="W, WW, Ha, TSZ of M(m, 3)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--source", choices=("polynomial", "closed", "both"), default="polynomial")
    fmt_arg(p)

    p = sub.add_parser("verify", help="cross-verify closed forms against BFS for a range of m")
    p.add_argument("--m-min", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--strict", action="store_true", help="exit 1 on any mismatch not listed as known")
    fmt_arg(p)

    p = sub.add_parser("graph", help="emit the ladder M(m, n)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=3)
    fmt_arg(p)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    code = 0
    try:
        if args.command == "poly":
            out = cmd_poly(args.m, args.n, args.method, args.format)
        elif args.command == "indices":
            out = cmd_indices(args.m, args.source, args.format)
        elif args.command == "verify":
            out, code = cmd_verify(args.m_min, args.m_max, args.strict, args.format)
        else:
            out = cmd_graph(args.m, args.n, args.format)
    except (UsageError, ValueError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())

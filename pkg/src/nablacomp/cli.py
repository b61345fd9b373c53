"""Command-line front end.

Exit status: 0 success, 1 verification failure, 2 usage error,
3 domain error, 4 resource error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from nablacomp.counting import (
    count_closed_form,
    count_enumerate,
    count_matrix,
    count_recurrence,
    recurrence_for,
    series,
)
from nablacomp.errors import DomainError, ResourceError
from nablacomp.graph import adjacency_matrix
from nablacomp.matrix import BigMatrix
from nablacomp.polynomial import (
    charpoly_determinant,
    charpoly_explicit,
    charpoly_recurrence,
)
from nablacomp.recurrence import matrix_power_direct, matrix_power_recurrent
from nablacomp.table import build_table, format_relation, table_row
from nablacomp.verify import run_checks

EXIT_VERIFY, EXIT_USAGE, EXIT_DOMAIN, EXIT_RESOURCE = 1, 2, 3, 4


def record(command: str, params: dict[str, Any], result: Any, warnings=()) -> dict[str, Any]:
    return {"command": command, "params": params, "result": result, "warnings": list(warnings)}


def dump(rec: dict[str, Any]) -> str:
    return json.dumps(rec, ensure_ascii=False)


def _matrix_json(a: BigMatrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in a.rows]


def _count(n: int, k: int, method: str) -> int:
    if method == "matrix":
        return count_matrix(n, k)
    if method == "recurrence":
        return count_recurrence(n, k)
    if method == "enumerate":
        return count_enumerate(n, k)
    value = count_closed_form(n, k)
    if value is None:
        raise DomainError(f"no closed form for n={n}; available for n=3 and n=6")
    return value


def cmd_count(args) -> str:
    value = _count(args.n, args.k, args.method)
    if args.format == "json":
        return dump(record("count", {"n": args.n, "k": args.k, "method": args.method}, str(value)))
    return str(value)


def cmd_series(args) -> str:
    values = series(args.n, args.k_max, args.method).values
    if args.format == "json":
        params = {"n": args.n, "k_max": args.k_max, "method": args.method}
        return dump(record("series", params, [str(v) for v in values]))
    if args.format == "csv":
        return "\n".join(["k,f", *(f"{k},{v}" for k, v in enumerate(values, 1))])
    if args.format == "bfile":
        return "\n".join(f"{k} {v}" for k, v in enumerate(values, 1))
    return "\n".join(str(v) for v in values)


_CHARPOLY = {
    "explicit": charpoly_explicit,
    "recurrence": charpoly_recurrence,
    "determinant": lambda n: charpoly_determinant(adjacency_matrix(n)),
}


def cmd_charpoly(args) -> str:
    p = _CHARPOLY[args.method](args.n)
    coeffs = p.high_to_low()
    if args.format == "json":
        result = {"n": args.n, "coeffs": [str(c) for c in coeffs]}
        return dump(record("charpoly", {"n": args.n, "method": args.method}, result))
    return " ".join(map(str, coeffs)) + "\n" + f"P_{args.n}(x) = {p.format()}"


def cmd_recurrence(args, warn) -> str:
    if args.n < 2:
        raise DomainError(f"n must be >= 2, got {args.n}")
    rec, shift = recurrence_for(args.n, args.reduced)
    rel = (rec.order, {rec.order - 1 - r: c for r, c in enumerate(rec.coefficients) if c})
    warnings = table_row(args.n).warnings if args.reduced else []
    if args.format == "json":
        result = {
            "order": rec.order,
            "shift": shift,
            "coefficients": [str(c) for c in rec.coefficients],
            "initial_values": [str(v) for v in rec.initial_values],
            "relation": format_relation(rel),
        }
        params = {"n": args.n, "reduced": args.reduced}
        return dump(record("recurrence", params, result, warnings))
    for w in warnings:
        warn(w)
    lines = [
        f"order: {rec.order}",
        f"coefficients: {' '.join(map(str, rec.coefficients))}",
        f"initial: {' '.join(map(str, rec.initial_values))}",
        f"relation: {format_relation(rel)}",
    ]
    if args.reduced:
        lines.insert(1, f"shift: {shift}")
    return "\n".join(lines)


def cmd_matrix(args) -> str:
    a = adjacency_matrix(args.n)
    if args.format == "json":
        return dump(record("matrix", {"n": args.n}, _matrix_json(a)))
    return "\n".join("".join(map(str, row)) for row in a.rows)


def cmd_power(args) -> str:
    a = adjacency_matrix(args.n)
    fn = matrix_power_direct if args.method == "direct" else matrix_power_recurrent
    p = fn(a, args.k)
    if args.format == "json":
        params = {"n": args.n, "k": args.k, "method": args.method}
        return dump(record("power", params, _matrix_json(p)))
    return str(p)


def cmd_table(args) -> str:
    if args.n_min < 2 or args.n_max < args.n_min:
        raise DomainError(f"need 2 <= n-min <= n-max, got {args.n_min}..{args.n_max}")
    rows = build_table(args.n_min, args.n_max)
    warnings = [w for r in rows for w in r.warnings]
    if args.format == "json":
        result = [
            {
                "n": r.n,
                "order": r.derived[0],
                "relation": format_relation(r.derived),
                "published": None if r.published is None else format_relation(r.published),
                "matches": r.matches,
            }
            for r in rows
        ]
        params = {"n_min": args.n_min, "n_max": args.n_max}
        return dump(record("table", params, result, warnings))
    lines = []
    for r in rows:
        status = {None: "not published", True: "matches published", False: "DIVERGES"}[r.matches]
        lines.append(f"n = {r.n:>2} | {format_relation(r.derived)} | {status}")
    lines += [f"warning: {w}" for w in warnings]
    return "\n".join(lines)


def cmd_verify(args) -> tuple[str, int]:
    if args.n_max < 2 or args.k_max < 1:
        raise DomainError("need --n-max >= 2 and --k-max >= 1")
    results = run_checks(args.n_max, args.k_max)
    failed = sum(not r.passed for r in results)
    if args.format == "json":
        result = [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]
        params = {"n_max": args.n_max, "k_max": args.k_max}
        out = dump(record("verify", params, result))
    else:
        lines = [
            f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail} ({r.seconds:.2f}s)"
            for r in results
        ]
        lines.append(f"{len(results) - failed} passed, {failed} failed")
        out = "\n".join(lines)
    return out, EXIT_VERIFY if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nablacomp",
        description="Count meaningful compositions of the grad/curl/div operator chain.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("plain", "json")):
        p.add_argument("--format", choices=choices, default="plain")

    p = sub.add_parser("count", help="f(k) for one dimension")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("matrix", "recurrence", "enumerate", "closed"),
                   default="matrix")
    fmt(p)

    p = sub.add_parser("series", help="f(1)..f(k_max)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--method", choices=("matrix", "recurrence", "enumerate", "closed"),
                   default="matrix")
    fmt(p, ("plain", "json", "csv", "bfile"))

    p = sub.add_parser("charpoly", help="characteristic polynomial, highest degree first")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=tuple(_CHARPOLY), default="explicit")
    fmt(p)

    p = sub.add_parser("recurrence", help="recurrence coefficients and initial values")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--reduced", action="store_true", help="strip the x^s factor first")
    fmt(p)

    p = sub.add_parser("matrix", help="adjacency matrix")
    p.add_argument("--n", type=int, required=True)
    fmt(p)

    p = sub.add_parser("power", help="k-th power of the adjacency matrix")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("direct", "recurrent"), default="direct")
    fmt(p)

    p = sub.add_parser("table", help="reduced recurrences per dimension")
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=10)
    fmt(p)

    p = sub.add_parser("verify", help="run the cross-validation suite")
    p.add_argument("--n-max", type=int, default=8, help="dimension bound for enumeration checks")
    p.add_argument("--k-max", type=int, default=10, help="order bound for enumeration checks")
    fmt(p)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0

    def warn(msg: str) -> None:
        print(f"warning: {msg}", file=sys.stderr)

    status = 0
    try:
        if args.command == "verify":
            out, status = cmd_verify(args)
        elif args.command == "recurrence":
            out = cmd_recurrence(args, warn)
        else:
            out = {
                "count": cmd_count,
                "series": cmd_series,
                "charpoly": cmd_charpoly,
                "matrix": cmd_matrix,
                "power": cmd_power,
                "table": cmd_table,
            }[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    sys.stdout.write(out + "\n")
    return status


def run() -> None:
    sys.exit(main())

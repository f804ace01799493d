"""Command-line interface.

    bring-quintic solve --a 9.09375 [--method series|newton|bisect|bring-radical]
    bring-quintic tables c --max-k 36
    bring-quintic tables k0-terms --a 1 --m-max 40
    bring-quintic tables partial-sums --a-list 1.5,1.2,1 --checkpoints 11,21,31,41
    bring-quintic scan --a-min 1.1 --a-max 1000 --count 10
    bring-quintic compare --a 3

Data goes to stdout, diagnostics to stderr. Exit status is 0 on success,
2 for invalid input or a domain the chosen method cannot handle, and 1 for
any other failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Iterable, List, Optional, Sequence

from . import __version__
from .coefficients import generate_coefficients
from .diagnostics import DEFAULT_CHECKPOINTS, accuracy_scan, k0_term_table, partial_sums
from .errors import BringQuinticError, CapacityError, DomainError
from .solver import (
    DEFAULT_BRING_TERMS,
    DEFAULT_MAX_ITER,
    DEFAULT_TOL,
    SolveReport,
    solve_bisection,
    solve_bring_radical,
    solve_newton,
    solve_series,
)
from .ultraradicals import TruncationPolicy

METHOD_NAMES = ("series", "newton", "bisect", "bring-radical")
REPORT_FIELDS = (
    "root",
    "scaled_root",
    "residual",
    "method",
    "terms_or_iterations",
    "polished",
    "unpolished_root",
)


class UsageError(Exception):
    """Bad command-line input detected after argparse."""


def fmt(value) -> str:
    """Render a value for CSV: 17 significant digits for floats."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def human(value) -> str:
    """Render a value for people: 15 significant digits, the precision binary64 always carries."""
    if isinstance(value, complex):
        return f"{value.real:#.15g}{value.imag:+#.15g}j"
    if isinstance(value, float):
        return format(value, "#.15g")
    return str(value)


def _json_safe(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    return value


def render_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    return buf.getvalue()


def render_json(obj) -> str:
    return json.dumps(_json_safe(obj), sort_keys=True) + "\n"


def _float_list(text: str) -> List[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {text!r}") from None


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _run_solve(args) -> SolveReport:
    if args.method == "series":
        policy = TruncationPolicy(m_max=args.terms) if args.terms is not None else None
        return solve_series(args.a, policy, args.tol, polish=not args.no_polish)
    if args.method == "newton":
        return solve_newton(args.a, args.x0, args.tol, args.max_iter)
    if args.method == "bisect":
        return solve_bisection(args.a, args.tol)
    terms = args.terms if args.terms is not None else DEFAULT_BRING_TERMS
    return solve_bring_radical(args.a, terms, args.tol)


def cmd_solve(args) -> str:
    report = _run_solve(args)
    data = report.to_dict(details=args.dump_ultraradicals)
    if args.format == "json":
        return render_json(data)
    ultra = report.ultraradicals if args.dump_ultraradicals else None
    if args.format == "csv":
        header = list(REPORT_FIELDS)
        row = [data[k] for k in REPORT_FIELDS]
        if ultra is not None:
            header += ["K0", "K1", "K2", "K3", "K4"]
            row += list(ultra.values)
        return render_csv(header, [row])
    lines = [f"{key}: {human(data[key])}" for key in REPORT_FIELDS]
    if ultra is not None:
        for name, value, used, reason in zip(
            ("K0", "K1", "K2", "K3", "K4"), ultra.values, ultra.m_used, ultra.stop_reason
        ):
            lines.append(f"{name}: {human(value)}  (m_used={used}, stop={reason.value})")
        lines.append("quartic_roots: " + ", ".join(human(z) for z in report.quartic_roots.roots))
    return "\n".join(lines) + "\n"


def cmd_tables(args) -> str:
    if args.table == "c":
        table = generate_coefficients(args.max_k)
        return render_csv(["k", "c_k"], enumerate(table.values, start=1))
    if args.table == "k0-terms":
        terms = k0_term_table(args.a, args.m_max)
        return render_csv(["m", "T_m"], terms.entries)
    a_values = _float_list(args.a_list)
    checkpoints = _int_list(args.checkpoints)
    if not a_values:
        raise UsageError("--a-list is empty")
    sums = partial_sums(a_values, checkpoints)
    header = ["a"] + [f"S_{n}" for n in sums.checkpoints]
    return render_csv(header, ([a, *row] for a, row in zip(sums.a_values, sums.sums)))


def cmd_scan(args) -> str:
    policy = TruncationPolicy(m_max=args.m_max)
    points = accuracy_scan(args.a_min, args.a_max, args.count, policy)
    if not any(p.ok for p in points):
        raise RuntimeError("every grid point failed")
    fields = ("a", "series_root", "oracle_root", "abs_error", "m_used", "error")
    if args.format == "json":
        return render_json({"points": [{f: getattr(p, f) for f in fields} for p in points]})
    return render_csv(fields, ([getattr(p, f) for f in fields] for p in points))


def cmd_compare(args) -> str:
    runs = [
        ("series", lambda: solve_series(args.a, tol=args.tol)),
        ("newton", lambda: solve_newton(args.a, tol=args.tol)),
        ("bisect", lambda: solve_bisection(args.a, args.tol)),
        ("bring-radical", lambda: solve_bring_radical(args.a, tol=args.tol)),
    ]
    rows = []
    for name, run in runs:
        try:
            r = run()
        except BringQuinticError as exc:
            rows.append([name, None, None, None, f"{exc.kind}: {exc}"])
        else:
            rows.append([name, r.root, r.residual, r.terms_or_iterations, None])
    return render_csv(["method", "root", "residual", "terms_or_iterations", "error"], rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bring-quintic",
        description="Real root of x^5 + x = a by ultraradical quartic reduction and reference methods.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve x^5 + x = a")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--method", choices=METHOD_NAMES, default="series")
    p.add_argument("--terms", type=int, help="outer terms m_max (series) or series terms (bring-radical)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--x0", type=float, help="newton starting point")
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    p.add_argument("--format", choices=("human", "json", "csv"), default="human")
    p.add_argument("--dump-ultraradicals", action="store_true")
    p.add_argument("--no-polish", action="store_true", help="skip the Newton correction (series)")
    p.set_defaults(handler=cmd_solve)

    p = sub.add_parser("tables", help="reproduce coefficient and convergence tables as CSV")
    tables = p.add_subparsers(dest="table", required=True)
    t = tables.add_parser("c", help="coefficients c_1..c_K")
    t.add_argument("--max-k", type=int, default=36)
    t = tables.add_parser("k0-terms", help="outer terms T_m of K0")
    t.add_argument("--a", type=float, required=True)
    t.add_argument("--m-max", type=int, default=40)
    t = tables.add_parser("partial-sums", help="partial sums S_N of K0")
    t.add_argument("--a-list", required=True)
    t.add_argument("--checkpoints", default=",".join(str(n) for n in DEFAULT_CHECKPOINTS))
    p.set_defaults(handler=cmd_tables)

    p = sub.add_parser("scan", help="series accuracy against bisection over a log grid")
    p.add_argument("--a-min", type=float, required=True)
    p.add_argument("--a-max", type=float, required=True)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--m-max", type=int, default=TruncationPolicy().m_max)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(handler=cmd_scan)

    p = sub.add_parser("compare", help="run every applicable method at one a")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(handler=cmd_compare)
    return parser


def _fail(code: int, kind: str, message: str) -> int:
    print(f"error: {kind}: {message}", file=sys.stderr)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.handler(args)
    except (DomainError, CapacityError) as exc:
        return _fail(2, exc.kind, str(exc))
    except (UsageError, ValueError) as exc:
        return _fail(2, "invalid_argument", str(exc))
    except BringQuinticError as exc:
        return _fail(1, exc.kind, str(exc))
    except Exception as exc:  # noqa: BLE001
        return _fail(1, "internal", f"{type(exc).__name__}: {exc}")
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())

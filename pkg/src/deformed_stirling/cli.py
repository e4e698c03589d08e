"""Command-line front end.

Exit codes: 0 success, 1 mathematical mismatch, 2 usage or input error.
Set ``DEFORMED_STIRLING_LOG`` (e.g. ``DEBUG``) for diagnostics on stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

from . import output
from .box import BoxFunction, parse_box
from .errors import DeformedStirlingError, InterpolationMismatch
from .gen_stirling import (
    ENUMERATION_BOUND,
    canonical_normal_order_word_power,
    s22_enumerate,
    s22_formula,
    s22_via_s11,
    so21_realization_report,
)
from .oracle import oracle_check
from .stirling import ROUTES, StirlingTable, compute_table, stirling_explicit_table, stirling_ogf_table, stirling_recurrence

log = logging.getLogger("deformed_stirling")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
NMAX_LIMIT = 64


class UsageError(Exception):
    pass


def _check_nmax(n: int) -> int:
    if not 1 <= n <= NMAX_LIMIT:
        raise UsageError(f"--n must be between 1 and {NMAX_LIMIT}")
    return n


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- commands -----------------------------------------------------------------


def cmd_table(box_text: str, nmax: int, route: str = "recurrence", fmt: str = "json") -> str:
    box = parse_box(box_text)
    _check_nmax(nmax)
    t0 = time.perf_counter()
    table = compute_table(box, nmax, route)
    log.info("table %s n=%d route=%s in %.3fs", box_text, nmax, route, time.perf_counter() - t0)
    return output.render_table(table, box_text, fmt)


def _compare(name: str, candidate: StirlingTable, reference: StirlingTable) -> dict:
    bad = [output.entry_key(n, k) for n, k in reference.keys() if candidate[n, k] != reference[n, k]]
    return {"name": name, "status": "fail" if bad else "pass", "mismatches": bad}


def verify_report(box: BoxFunction, box_text: str, nmax: int, candidate: StirlingTable | None = None) -> dict:
    """Route-vs-route and route-vs-oracle comparisons as a JSON-ready dict."""
    reference = stirling_recurrence(box, nmax)
    checks = []
    if candidate is not None:
        checks.append(_compare("table_vs_recurrence", candidate, reference))
    checks.append(_compare("ogf_vs_recurrence", stirling_ogf_table(box, nmax), reference))
    if box.is_symbolic:
        checks.append({"name": "explicit_vs_recurrence", "status": "skipped", "mismatches": [],
                       "note": "explicit route needs a concrete box"})
    else:
        try:
            checks.append(_compare("explicit_vs_recurrence", stirling_explicit_table(box, nmax), reference))
        except InterpolationMismatch as exc:
            checks.append({"name": "explicit_vs_recurrence", "status": "fail", "mismatches": [], "note": str(exc)})
        except DeformedStirlingError as exc:
            checks.append({"name": "explicit_vs_recurrence", "status": "skipped", "mismatches": [], "note": str(exc)})
    target = candidate if candidate is not None else reference
    report = oracle_check(target)
    checks.append({
        "name": "oracle_vs_table" if candidate is not None else "oracle_vs_recurrence",
        "status": "pass" if report.passed else "fail",
        "mismatches": [output.entry_key(n, k) for n, k in report.mismatches]
        + [f"off_diagonal_{n}_{a}_{b}" for n, (a, b) in report.off_diagonal],
    })
    return {
        "box": box_text,
        "nmax": nmax,
        "checks": checks,
        "passed": all(c["status"] != "fail" for c in checks),
    }


def gen22_report(nmax: int, check_realization: bool = False) -> dict:
    rows = []
    for n in range(1, nmax + 1):
        oracle = canonical_normal_order_word_power(n)
        values = {}
        agree = True
        for k in range(2, 2 * n + 1):
            routes = {
                "formula": s22_formula(n, k),
                "via_s11": s22_via_s11(n, k),
                "oracle": int(oracle.coefficient(k, k)),
                "enumeration": s22_enumerate(n, k) if n <= ENUMERATION_BOUND else None,
            }
            present = {v for v in routes.values() if v is not None}
            agree = agree and len(present) == 1
            values[str(k)] = routes
        stray = [key for key in oracle.terms if key[0] != key[1] or not 2 <= key[0] <= 2 * n]
        rows.append({"n": n, "values": values, "agree": agree and not stray})
    doc = {"nmax": nmax, "rows": rows}
    passed = all(r["agree"] for r in rows)
    if check_realization:
        results = []
        for n in range(1, nmax + 1):
            rep = so21_realization_report(n)
            entry = {"n": n, "identity": rep.identity_holds, "table": rep.table_agrees}
            if not rep.identity_holds:
                entry["lhs"] = rep.lhs.render()
                entry["rhs"] = rep.rhs.render()
            results.append(entry)
            passed = passed and rep.identity_holds and rep.table_agrees
        doc["realization"] = results
    doc["passed"] = passed
    return doc


def gen22_csv(doc: dict) -> str:
    lines = ["n,k,formula,via_s11,oracle,enumeration"]
    for row in doc["rows"]:
        for k, routes in row["values"].items():
            enum = "" if routes["enumeration"] is None else routes["enumeration"]
            lines.append(f"{row['n']},{k},{routes['formula']},{routes['via_s11']},{routes['oracle']},{enum}")
    return "\n".join(lines) + "\n"


PAPER_TABLES = (("symbolic", 4), ("so3", 4), ("so21", 4))


def seed_paper_tables(fmt: str = "json") -> str:
    """All published family tables (symbolic, so3, so21 up to n = 4) in one document."""
    tables = [(text, stirling_recurrence(parse_box(text), n)) for text, n in PAPER_TABLES]
    if fmt == "json":
        return output.dumps({"tables": [output.table_payload(t, text) for text, t in tables]})
    if fmt == "latex":
        return "\n".join(output.table_latex(t, title=f"box {text}") for text, t in tables)
    if fmt == "csv":
        lines = ["box,n,k,polynomial"]
        for text, t in tables:
            lines += [f"{text},{row}" for row in output.table_csv(t).splitlines()[1:]]
        return "\n".join(lines) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


# --- argument handling ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deformed-stirling",
        description="Normal ordering of (A†A)^n for deformed bosons: deformed Stirling polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="compute the triangle P(n,k) up to --n")
    p.add_argument("--box", required=True, help="canonical | so3 | so21 | symbolic | expression in N")
    p.add_argument("--n", type=int, required=True, dest="nmax")
    p.add_argument("--route", choices=ROUTES, default="recurrence")
    p.add_argument("--format", choices=output.FORMATS, default="json")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="cross-check routes and the rewriting oracle")
    p.add_argument("--box", help="box function (defaults to the one recorded in --table)")
    p.add_argument("--n", type=int, dest="nmax")
    p.add_argument("--table", help="JSON table document to verify instead of a freshly computed one")
    p.add_argument("--out")

    p = sub.add_parser("gen22", help="generalized Stirling numbers S22(n,k)")
    p.add_argument("--n", type=int, required=True, dest="nmax")
    p.add_argument("--check-realization", action="store_true")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")

    p = sub.add_parser("seed-paper-tables", help="regenerate all published family tables")
    p.add_argument("--format", choices=output.FORMATS, default="json")
    p.add_argument("--out")
    return parser


def run(args: argparse.Namespace) -> int:
    if args.command == "table":
        _emit(cmd_table(args.box, args.nmax, args.route, args.format), args.out)
        return EXIT_OK

    if args.command == "verify":
        candidate = None
        if args.table:
            with open(args.table, encoding="utf-8") as fh:
                payload = json.load(fh)
            box_text = args.box or payload["box"]
            box = parse_box(box_text)
            try:
                candidate = output.load_table(payload, box)
            except (KeyError, ValueError) as exc:
                raise UsageError(f"bad table document: {exc}") from exc
            nmax = candidate.nmax
        else:
            if args.box is None or args.nmax is None:
                raise UsageError("verify needs --box and --n, or --table")
            box_text = args.box
            box = parse_box(box_text)
            nmax = args.nmax
        _check_nmax(nmax)
        report = verify_report(box, box_text, nmax, candidate)
        _emit(output.dumps(report), args.out)
        return EXIT_OK if report["passed"] else EXIT_MISMATCH

    if args.command == "gen22":
        if args.nmax < 1:
            raise UsageError("--n must be positive")
        doc = gen22_report(args.nmax, args.check_realization)
        _emit(gen22_csv(doc) if args.format == "csv" else output.dumps(doc), args.out)
        return EXIT_OK if doc["passed"] else EXIT_MISMATCH

    if args.command == "seed-paper-tables":
        _emit(seed_paper_tables(args.format), args.out)
        return EXIT_OK

    raise UsageError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    level = os.environ.get("DEFORMED_STIRLING_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except InterpolationMismatch as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (UsageError, DeformedStirlingError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

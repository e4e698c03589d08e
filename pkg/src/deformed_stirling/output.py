"""Deterministic JSON / CSV / LaTeX documents for tables and reports."""

from __future__ import annotations

import csv
import io
import json

from .algebra import parse_poly, render, render_latex
from .box import BoxFunction, parse_box
from .stirling import StirlingTable

FORMATS = ("json", "csv", "latex")


def entry_key(n: int, k: int) -> str:
    return f"P_{n}_{k}"


def table_payload(table: StirlingTable, box_text: str) -> dict:
    return {
        "box": box_text,
        "route": table.route,
        "nmax": table.nmax,
        "entries": {entry_key(n, k): render(table[n, k]) for n, k in table.keys()},
    }


def dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def table_json(table: StirlingTable, box_text: str) -> str:
    return dumps(table_payload(table, box_text))


def table_csv(table: StirlingTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "k", "polynomial"])
    for n, k in table.keys():
        writer.writerow([n, k, render(table[n, k])])
    return buf.getvalue()


def table_latex(table: StirlingTable, title: str | None = None) -> str:
    """One ``\\mathbb{P}_{n,k}(N)=...`` line per entry, a blank row between families."""
    lines = []
    if title:
        lines.append(f"% {title}")
    lines.append(r"\begin{array}{l}")
    for n in range(1, table.nmax + 1):
        if n > 1:
            lines.append(r"\\")
        for k in range(1, n + 1):
            lines.append(rf"\mathbb{{P}}_{{{n},{k}}}(N)={render_latex(table[n, k])},\\")
    lines.append(r"\end{array}")
    return "\n".join(lines) + "\n"


def render_table(table: StirlingTable, box_text: str, fmt: str) -> str:
    if fmt == "json":
        return table_json(table, box_text)
    if fmt == "csv":
        return table_csv(table)
    if fmt == "latex":
        return table_latex(table, title=f"box {box_text}, route {table.route}")
    raise ValueError(f"unknown format {fmt!r}")


def load_table(payload: dict, box: BoxFunction | None = None) -> StirlingTable:
    """Inverse of :func:`table_payload`."""
    if box is None:
        box = parse_box(payload["box"])
    entries = {}
    for key, text in payload["entries"].items():
        _, n, k = key.split("_")
        entries[int(n), int(k)] = parse_poly(text, mode=box.mode)
    nmax = int(payload["nmax"])
    expected = {(n, k) for n in range(1, nmax + 1) for k in range(1, n + 1)}
    if set(entries) != expected:
        raise ValueError("table document does not cover the full triangle")
    return StirlingTable(box, nmax, entries, payload.get("route", "recurrence"))

"""CSV / JSON / pretty rendering of exact matrices and tables."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Sequence

from .exact_linalg import ExactMatrix, format_scalar, normalize

FORMATS = ("csv", "json", "pretty")


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return format_scalar(normalize(value))
    return str(value)


def matrix_to_pretty(m: ExactMatrix) -> str:
    """Right-aligned columns, two spaces apart; one line per row."""
    cells = [[format_scalar(x) for x in row] for row in m.rows]
    if not cells:
        return ""
    widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells) + "\n"


def matrix_to_csv(m: ExactMatrix) -> str:
    return "".join(",".join(format_scalar(x) for x in row) + "\n" for row in m.rows)


def matrix_to_json(m: ExactMatrix) -> str:
    return json.dumps([[format_scalar(x) for x in row] for row in m.rows]) + "\n"


def render_matrix(m: ExactMatrix, fmt: str) -> str:
    return {"csv": matrix_to_csv, "json": matrix_to_json, "pretty": matrix_to_pretty}[fmt](m)


def parse_matrix_csv(text: str) -> ExactMatrix:
    return ExactMatrix([Fraction(tok) for tok in line.split(",")] for line in text.strip().splitlines())


def parse_matrix_json(text: str) -> ExactMatrix:
    return ExactMatrix([Fraction(tok) for tok in row] for row in json.loads(text))


def render_table(header: Sequence[str], rows: Sequence[Sequence], fmt: str) -> str:
    """Render a list of rows under ``header``; values keep exact string forms."""
    cells = [[_cell(v) for v in row] for row in rows]
    if fmt == "json":
        return json.dumps([dict(zip(header, row)) for row in cells], indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(cells)
        return buf.getvalue()
    if fmt == "pretty":
        widths = [max([len(h)] + [len(row[j]) for row in cells]) for j, h in enumerate(header)]
        lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
        lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")

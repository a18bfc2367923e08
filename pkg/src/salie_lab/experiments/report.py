"""Deterministic CSV / JSON serialisation of a BoundReport."""

from __future__ import annotations

import csv
import io
import json

from ..errors import UnsupportedFormat
from .runner import COLUMNS, BoundReport

SCHEMA = "salie-lab/bound-report"
SCHEMA_VERSION = 1


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def emit(report: BoundReport, fmt: str = "csv") -> bytes:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        for rec in report.records:
            writer.writerow([_cell(rec.get(col)) for col in COLUMNS])
        return buf.getvalue().encode()
    if fmt == "json":
        doc = {
            "schema": SCHEMA,
            "schema_version": SCHEMA_VERSION,
            "artifact_version": report.version,
            "seed": report.seed,
            "spec": report.spec.to_dict(),
            "records": [{col: rec.get(col) for col in COLUMNS} for rec in report.records],
            "summary": report.summary,
        }
        return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode()
    raise UnsupportedFormat(f"unsupported format {fmt!r}; use csv or json")

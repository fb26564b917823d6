"""Deterministic report serialization.

Same inputs, same seed, same budgets must give byte-identical output, so
JSON is emitted with sorted keys and no timestamps, rationals are rendered
exactly as "num/den" strings, unreachable distances as the string
"infinity", and undecided verdicts as "unknown".
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import fields, is_dataclass
from fractions import Fraction

from .digraph import INF, UNKNOWN, DirectedCycle, DirectedPath

SCHEMA_VERSION = 1


def jsonable(value):
    """Recursively convert package values into JSON-safe structures."""
    if value is UNKNOWN:
        return "unknown"
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, float):
        return "infinity" if value == INF else value
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (DirectedCycle, DirectedPath)):
        return list(value.vertices)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (frozenset, set)):
        return [jsonable(v) for v in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if is_dataclass(value):
        return {f.name: jsonable(getattr(value, f.name)) for f in fields(value)}
    return repr(value)


def make_report(instance: str, operation: str, parameters: dict, result,
                certificate=None, assertions=None) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "instance": instance,
        "operation": operation,
        "parameters": jsonable(parameters or {}),
        "result": jsonable(result),
        "certificate": jsonable(certificate),
        "assertions": [
            {"name": name, "holds": bool(holds)}
            for name, holds in (assertions or [])
        ],
    }


def dumps(report) -> str:
    return json.dumps(jsonable(report), sort_keys=True, indent=2) + "\n"


def write_csv(rows, columns) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def _csv_cell(value):
    if value is UNKNOWN:
        return "unknown"
    if isinstance(value, float):
        return "infinity" if value == INF else repr(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, bool):
        return "1" if value else "0"
    return value


def all_assertions_hold(report) -> bool:
    return all(a["holds"] for a in report.get("assertions", []))

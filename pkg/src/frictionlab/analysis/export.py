"""CSV and JSON serialisation of scan results.

CSV floats are written with 17 significant digits and JSON floats with
Python's shortest round-trip repr; both recover the binary64 value exactly,
and repeated runs produce byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
import math

from .scan import ErrorReport
from .tables import Table1Cell, Table2

ERROR_ROW_HEADER = ("reynolds", "relative_roughness", "f_ref", "f_method",
                    "error_percent", "fault")
TABLE2_HEADER = ("method", "measured_max_percent", "quoted_max_percent",
                 "log_count", "power_count", "total", "total_clamond", "pass")
TABLE1_HEADER = ("reynolds", "relative_roughness", "x", "naive_w", "omega",
                 "y", "overflow")


def fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    v = float(value)
    if math.isnan(v):
        return "nan"
    return format(v, ".17g")


def _writer(stream):
    return csv.writer(stream, lineterminator="\n")


def write_error_rows(report: ErrorReport, stream) -> None:
    w = _writer(stream)
    w.writerow(ERROR_ROW_HEADER)
    rows = report.rows
    for r, e, fr, fm, err, fault in zip(
            rows.reynolds.tolist(), rows.relative_roughness.tolist(),
            rows.f_ref.tolist(), rows.f_method.tolist(),
            rows.error_percent.tolist(), rows.fault.tolist()):
        w.writerow((fmt(r), fmt(e), fmt(fr), fmt(fm), fmt(err), fault))


def write_table2(table: Table2, stream) -> None:
    w = _writer(stream)
    w.writerow(TABLE2_HEADER)
    for row in table.rows:
        w.writerow((row.name, fmt(row.measured_max_percent),
                    fmt(row.quoted_max_percent), row.log_count, row.power_count,
                    row.total, row.total_clamond, fmt(row.passed)))


def write_table1(cells: list[Table1Cell], stream) -> None:
    w = _writer(stream)
    w.writerow(TABLE1_HEADER)
    for c in cells:
        naive = str(c.naive_w) if c.overflow else fmt(c.naive_w)
        w.writerow((fmt(c.reynolds), fmt(c.relative_roughness), fmt(c.x),
                    naive, fmt(c.omega), fmt(c.y), fmt(c.overflow)))


def _json_number(v):
    if isinstance(v, float):
        return None if math.isnan(v) else v
    if isinstance(v, dict):
        return {k: _json_number(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_json_number(x) for x in v]
    return v


def scan_report_json(metric: str, n_r: int, n_eps: int,
                     reports: list[ErrorReport], calibration: dict | None = None) -> str:
    """Top-level ``{metric, grid: {n_R, n_eps}, methods: [...]}`` document."""
    doc = {
        "metric": metric,
        "grid": {"n_R": n_r, "n_eps": n_eps},
        "methods": [_json_number(r.summary()) for r in reports],
    }
    if calibration is not None:
        doc["calibration"] = _json_number(calibration)
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def to_text(writer, obj) -> str:
    buf = io.StringIO()
    writer(obj, buf)
    return buf.getvalue()

"""
Canonical rendering of reports.

JSON is key-sorted with a fixed indent; TSV has one line per row and per check.
Only the body of a report is canonical; `generated_at` is written as a separate
header key when present.
"""
import csv
import io
import json
import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional

import numpy as np

from lib.data_types import Report

log = logging.getLogger(__file__)


def _plain(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value.tolist()]
    if isinstance(value, (frozenset, set)):
        return sorted(_plain(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return value


def to_json(report: Report) -> str:
    document = _plain(report.body())
    if report.generated_at is not None:
        document["generated_at"] = report.generated_at
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _cell(value: Any) -> str:
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return str(value)


def to_tsv(report: Report) -> str:
    body = _plain(report.body())
    out = io.StringIO()
    writer = csv.writer(out, delimiter="\t", lineterminator="\n")
    writer.writerow(["#", "tool_version", body["tool_version"]])
    writer.writerow(["#", "spec", _cell(body["spec"])])
    writer.writerow(["#", "parameters", _cell(body["parameters"])])
    if report.generated_at is not None:
        writer.writerow(["#", "generated_at", report.generated_at])
    rows: List[Dict[str, Any]] = body["rows"]
    if rows:
        columns = sorted({key for row in rows for key in row})
        writer.writerow(["row"] + columns)
        for row in rows:
            writer.writerow(["row"] + [_cell(row.get(c, "")) for c in columns])
    checks = body["checks"]
    if checks:
        columns = ["name", "anchor", "passed", "expected", "actual", "note"]
        writer.writerow(["check"] + columns)
        for check in checks:
            writer.writerow(["check"] + [_cell(check[c]) for c in columns])
    return out.getvalue()


def render(report: Report, fmt: str = "json") -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "tsv":
        return to_tsv(report)
    raise ValueError(f"unknown format {fmt!r}")


def write_report(report: Report, fmt: str = "json", out: Optional[str] = None) -> str:
    text = render(report, fmt)
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
        log.info(f"report written to {out}")
    return text

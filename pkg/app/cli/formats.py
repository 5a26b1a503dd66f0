"""Report and result rendering: markdown tables, csv rows and json documents."""
from __future__ import annotations

import csv
import io
import json
from typing import Any, Iterable

from app.harness.reports import SCHEMA_VERSION, VerificationReport, reports_document, sort_reports, to_jsonable

REPORT_COLUMNS = ("instance", "claim", "k", "status", "notes")


def _json(document: dict[str, Any]) -> str:
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def _report_rows(reports: Iterable[VerificationReport]) -> list[tuple]:
    """One row per (instance, claim, k); reports without a k range get one row."""
    rows = []
    for report in sort_reports(reports):
        notes = "; ".join(report.notes)
        for k in report.k_range or (None,):
            rows.append((report.instance, report.claim_id, "" if k is None else k, report.status.value, notes))
    return rows


def _markdown(header: Iterable[str], rows: Iterable[Iterable[Any]]) -> str:
    header = list(header)
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines.extend("| " + " | ".join(str(cell) for cell in row) + " |" for row in rows)
    return "\n".join(lines) + "\n"


def _csv(header: Iterable[str], rows: Iterable[Iterable[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def render_reports(reports: Iterable[VerificationReport], output_format: str) -> str:
    reports = list(reports)
    if output_format == "json":
        return _json(reports_document(reports))
    rows = _report_rows(reports)
    if output_format == "csv":
        return _csv(REPORT_COLUMNS, rows)
    # markdown keeps one row per report
    summary = [
        (r.instance, r.claim_id, ",".join(map(str, r.k_range)), r.status.value, "; ".join(r.notes))
        for r in sort_reports(reports)
    ]
    return _markdown(REPORT_COLUMNS, summary)


def render_result(command: str, result: dict[str, Any], output_format: str) -> str:
    """Plain computations (chromatic, girth, dp-exact, ...) as key/value output."""
    data = to_jsonable(result)
    if output_format == "json":
        return _json({"schemaVersion": SCHEMA_VERSION, "command": command, "result": data})
    rows = [(key, value if isinstance(value, (int, str)) else json.dumps(value, sort_keys=True))
            for key, value in sorted(data.items())]
    if output_format == "csv":
        return _csv(("key", "value"), rows)
    return f"## {command}\n\n" + _markdown(("key", "value"), rows)

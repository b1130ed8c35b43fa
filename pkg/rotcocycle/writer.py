"""Report rendering: sorted-key JSON or flat CSV rows."""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Iterable
from pathlib import Path

from .constants import FORMAT_CSV, FORMAT_JSON, JSON_INDENT
from .errors import ConfigError
from .normalize import normalize_value
from .types import JsonObject, OutputFormat


class ReportWriter:
    """Render a report payload.

    JSON output uses sorted keys, a 2-space indent and a trailing newline, so
    identical payloads give identical bytes. CSV output writes one row per entry
    of ``rows_key`` (falling back to a single ``key,value`` table).
    """

    def __init__(self, fmt: OutputFormat = FORMAT_JSON, rows_key: str | None = None):
        if fmt not in (FORMAT_JSON, FORMAT_CSV):
            raise ConfigError(f"unknown format {fmt!r}. Hint: use 'json' or 'csv'.")
        self.fmt = fmt
        self.rows_key = rows_key

    def render(self, payload: JsonObject) -> str:
        data = normalize_value(payload)
        if self.fmt == FORMAT_JSON:
            return json.dumps(data, indent=JSON_INDENT, sort_keys=True, ensure_ascii=False) + "\n"
        assert isinstance(data, dict)
        rows = data.get(self.rows_key) if self.rows_key else None
        if isinstance(rows, list) and rows and all(isinstance(row, dict) for row in rows):
            return _csv_table(rows)
        return _csv_table([{"key": k, "value": json.dumps(v, sort_keys=True)} for k, v in sorted(data.items())])

    def write(self, payload: JsonObject, out: str | Path | None) -> str:
        text = self.render(payload)
        if out is not None:
            Path(out).write_text(text, encoding="utf-8")
        return text


def _csv_table(rows: Iterable[dict]) -> str:
    rows = list(rows)
    fields = sorted({key for row in rows for key in row})
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: v if not isinstance(v, (dict, list)) else json.dumps(v, sort_keys=True) for k, v in row.items()})
    return buffer.getvalue()


__all__ = ["ReportWriter"]

"""
CLI Output
----------
Machine-readable emitters. JSON is canonical (sorted keys, shortest
round-trip floats); CSV uses ',' separators, '.' decimals and a header row.
"""

from __future__ import annotations

import csv
import io
from enum import Enum
from typing import Any, Dict, List, Sequence

from ..models.files import dumps


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(float(value))
    return str(value)


def to_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def render(
    payload: Dict[str, Any],
    fmt: OutputFormat,
    header: Sequence[str] = (),
    rows: Sequence[Sequence[Any]] = (),
) -> str:
    """JSON of ``payload``, or the CSV table ``header`` + ``rows``."""
    if OutputFormat(fmt) is OutputFormat.CSV:
        return to_csv(header, rows)
    return dumps(payload)


def table(records: List[Dict[str, Any]], columns: Sequence[str]) -> List[List[Any]]:
    return [[record.get(c) for c in columns] for record in records]

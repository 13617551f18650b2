"""Rendering of command results and jsonlines record sinks."""
import json
from enum import Enum
from pathlib import Path
from typing import Any, Iterable, Mapping

import jsonlines

SCHEMA_VERSION = 1

Report = Mapping[str, Any]


class ReportFormat(str, Enum):
    """How reports are printed."""

    TEXT = "text"
    JSON = "json"


def _text_lines(value: Any, indent: int) -> list[str]:
    prefix = "  " * indent
    if isinstance(value, Mapping):
        lines = []
        for key in sorted(value):
            item = value[key]
            if isinstance(item, Mapping) or _is_table(item):
                lines.append(f"{prefix}{key}:")
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f"{prefix}{key}: {_scalar(item)}")
        return lines
    if _is_table(value):
        lines = []
        for item in value:
            nested = _text_lines(item, indent + 1) or [""]
            lines.append(f"{prefix}- {nested[0].strip()}".rstrip())
            lines.extend(nested[1:])
        return lines
    return [f"{prefix}{_scalar(value)}"]


def _is_table(value: Any) -> bool:
    return isinstance(value, (list, tuple)) and any(isinstance(v, Mapping) for v in value)


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if value is None:
        return "-"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_scalar(v) for v in value) + "]"
    return str(value)


def emit_report(results: Report, format_: ReportFormat) -> str:
    """
    Renders `results` with the schema version added. Both formats sort keys, so
    equal results always give the same bytes.
    """
    payload = {"schema": SCHEMA_VERSION, **results}
    if format_ is ReportFormat.JSON:
        return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)
    return "\n".join(_text_lines(payload, 0))


def append_records(path: Path, records: Iterable[Mapping[str, Any]]) -> int:
    """Appends one JSON line per record; returns how many were written."""
    items = list(records)
    with jsonlines.open(path, "a") as sink:
        sink.write_all(items)
    return len(items)


def jsonl_reader(path: Path) -> jsonlines.Reader:
    """
    Wrapper for `jsonlines.open` to make it easier to ignore mypy errors about
    Reader|Writer.
    """
    return jsonlines.open(path, "r")

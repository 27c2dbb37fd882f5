from __future__ import annotations

import json
from collections.abc import Iterable, Iterator
from pathlib import Path
from typing import Any, NamedTuple

from rtk.domain.status_level import Status, error

from .infrastructure_resources import str_resources

COMMENT_PREFIX = "#"


class Row(NamedTuple):
    line: int
    fields: list[str]


class JsonRow(NamedTuple):
    line: int
    value: dict[str, Any]


def to_relative(path: str) -> str:
    """Return path relative to CWD as a POSIX string, or the original path if not under CWD."""
    try:
        return Path(path).relative_to(Path.cwd()).as_posix()
    except ValueError:
        return path


def read_text(path: str) -> tuple[str | None, list[Status]]:
    file_path = Path(path)
    if not file_path.is_file():
        return None, [error(str_resources.err_file_missing.format(path=path))]
    try:
        return file_path.read_text(encoding="utf-8"), []
    except (OSError, UnicodeDecodeError) as e:
        return None, [error(str_resources.err_file_unreadable.format(path=path, reason=e))]


def content_lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield (1-based line number, line) for lines that are neither blank nor '#' comments."""
    for number, line in enumerate(text.splitlines(), start=1):
        if line.strip() and not line.startswith(COMMENT_PREFIX):
            yield number, line


def read_tsv(path: str, columns: Iterable[int]) -> tuple[list[Row] | None, list[Status]]:
    """Read tab-separated rows; every row must have one of the allowed column counts."""
    text, errors = read_text(path)
    if text is None:
        return None, errors
    allowed = set(columns)
    rows: list[Row] = []
    for number, line in content_lines(text):
        fields = line.rstrip("\r").split("\t")
        if len(fields) not in allowed:
            expected = " or ".join(str(c) for c in sorted(allowed))
            errors.append(error(str_resources.err_tsv_columns.format(
                path=path, line=number, expected=expected, got=len(fields)
            )))
            continue
        rows.append(Row(number, fields))
    return rows, errors


def read_jsonl(path: str, required: Iterable[str]) -> tuple[list[JsonRow] | None, list[Status]]:
    """Read JSON-lines objects, checking that each carries the required fields."""
    text, errors = read_text(path)
    if text is None:
        return None, errors
    wanted = list(required)
    rows: list[JsonRow] = []
    for number, line in content_lines(text):
        try:
            value = json.loads(line)
        except json.JSONDecodeError as e:
            errors.append(error(str_resources.err_json_line.format(path=path, line=number, reason=e.msg)))
            continue
        if not isinstance(value, dict):
            errors.append(error(str_resources.err_json_object.format(path=path, line=number)))
            continue
        missing = [f for f in wanted if f not in value]
        if missing:
            errors.append(error(str_resources.err_json_fields.format(path=path, line=number, fields=missing)))
            continue
        rows.append(JsonRow(number, value))
    return rows, errors


def write_jsonl(path: str, records: Iterable[dict[str, Any]]) -> int:
    count = 0
    with Path(path).open("w", encoding="utf-8", newline="\n") as out:
        for record in records:
            out.write(json.dumps(record, ensure_ascii=False, sort_keys=False))
            out.write("\n")
            count += 1
    return count


def format_tsv(rows: Iterable[Iterable[object]], header_lines: Iterable[str] = ()) -> str:
    """TSV text; header lines first, each prefixed with '# '."""
    lines = [f"{COMMENT_PREFIX} {header}" for header in header_lines]
    lines.extend("\t".join(_format_cell(cell) for cell in row) for row in rows)
    return "".join(line + "\n" for line in lines)


def write_tsv(path: str, rows: Iterable[Iterable[object]], header_lines: Iterable[str] = ()) -> int:
    """Write rows as TSV after the header lines; returns the row count."""
    materialized = [list(row) for row in rows]
    Path(path).write_text(format_tsv(materialized, header_lines), encoding="utf-8", newline="\n")
    return len(materialized)


def _format_cell(cell: object) -> str:
    if isinstance(cell, float):
        return repr(cell)
    return str(cell)

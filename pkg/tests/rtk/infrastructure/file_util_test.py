from __future__ import annotations

from pathlib import Path

from rtk.domain.status_level import StatusLevel
from rtk.infrastructure.file_util import format_tsv, read_jsonl, read_text, read_tsv, write_jsonl, write_tsv

# --- read_text ---


def test_read_missing_file_returns_error(tmp_path: Path) -> None:
    text, errors = read_text(str(tmp_path / "absent.tsv"))

    assert text is None
    assert errors[0].level == StatusLevel.ERROR
    assert "not found" in errors[0].description


# --- read_tsv ---


def test_read_tsv_skips_comments_and_blank_lines(tmp_path: Path) -> None:
    path = tmp_path / "rows.tsv"
    path.write_text("# header\n\na\tb\n# more\nc\td\n", encoding="utf-8")

    rows, errors = read_tsv(str(path), (2,))

    assert errors == []
    assert rows is not None
    assert [(r.line, r.fields) for r in rows] == [(3, ["a", "b"]), (5, ["c", "d"])]


def test_read_tsv_reports_column_count_with_line(tmp_path: Path) -> None:
    path = tmp_path / "rows.tsv"
    path.write_text("a\tb\nc\n", encoding="utf-8")

    rows, errors = read_tsv(str(path), (2, 3))

    assert rows is not None and len(rows) == 1
    assert len(errors) == 1
    assert ":2:" in errors[0].description
    assert "2 or 3" in errors[0].description


def test_read_tsv_tolerates_crlf(tmp_path: Path) -> None:
    path = tmp_path / "rows.tsv"
    path.write_bytes(b"a\tb\r\n")

    rows, _ = read_tsv(str(path), (2,))

    assert rows is not None
    assert rows[0].fields == ["a", "b"]


# --- read_jsonl ---


def test_read_jsonl_validates_each_line(tmp_path: Path) -> None:
    path = tmp_path / "rows.jsonl"
    path.write_text('{"doc_id": "d1", "text": "x"}\nnot json\n[1, 2]\n{"doc_id": "d2"}\n', encoding="utf-8")

    rows, errors = read_jsonl(str(path), ("doc_id", "text"))

    assert rows is not None
    assert [r.value["doc_id"] for r in rows] == ["d1"]
    assert [f":{n}:" in e.description for n, e in zip((2, 3, 4), errors, strict=True)] == [True] * 3
    assert "invalid JSON" in errors[0].description
    assert "JSON object" in errors[1].description
    assert "text" in errors[2].description


def test_write_jsonl_keeps_unicode_and_counts(tmp_path: Path) -> None:
    path = tmp_path / "out.jsonl"

    count = write_jsonl(str(path), iter([{"term": "cudâ"}, {"term": "cuda"}]))

    assert count == 2
    assert path.read_text(encoding="utf-8") == '{"term": "cudâ"}\n{"term": "cuda"}\n'


# --- write_tsv ---


def test_format_tsv_prefixes_header_lines() -> None:
    text = format_tsv([("car", "vehicle", 0.68), ("ford", 3)], ["config: {}"])

    assert text == "# config: {}\ncar\tvehicle\t0.68\nford\t3\n"


def test_write_tsv_returns_row_count(tmp_path: Path) -> None:
    path = tmp_path / "out.tsv"

    count = write_tsv(str(path), (row for row in [("a", 1), ("b", 2)]))

    assert count == 2
    assert path.read_bytes() == b"a\t1\nb\t2\n"

"""Readers for probe input files (JSON lines) and value lists."""

from __future__ import annotations

from dataclasses import dataclass

from rtk.analysis.stemmer import parse_word_list
from rtk.domain.status_level import Status, error
from rtk.infrastructure.file_util import read_jsonl, read_text, read_tsv

from .probes import GridRow, PostfixRow
from .probes_resources import str_resources


@dataclass(frozen=True)
class SweepSpec:
    query: str
    template: str
    start: int
    end: int

    @property
    def years(self) -> range:
        return range(self.start, self.end + 1)


def read_grid_rows(path: str) -> tuple[list[GridRow] | None, list[Status]]:
    rows, errors = read_jsonl(path, ("query", "template"))
    if rows is None:
        return None, errors
    original = [r.value.get("original_value") for r in rows]
    return [
        GridRow(str(r.value["query"]), str(r.value["template"]), str(o) if o is not None else None)
        for r, o in zip(rows, original, strict=True)
    ], errors


def read_postfix_rows(path: str) -> tuple[list[PostfixRow] | None, list[Status]]:
    rows, errors = read_jsonl(path, ("query", "doc", "common_term"))
    if rows is None:
        return None, errors
    return [PostfixRow(str(r.value["query"]), str(r.value["doc"]), str(r.value["common_term"])) for r in rows], errors


def read_sweeps(path: str) -> tuple[list[SweepSpec] | None, list[Status]]:
    rows, errors = read_jsonl(path, ("query", "template", "start", "end"))
    if rows is None:
        return None, errors
    sweeps: list[SweepSpec] = []
    for line, value in rows:
        bad = [f for f in ("start", "end") if not isinstance(value[f], int) or isinstance(value[f], bool)]
        if bad:
            errors.append(error(str_resources.err_int_field.format(path=path, line=line, field=bad[0])))
            continue
        sweeps.append(SweepSpec(str(value["query"]), str(value["template"]), value["start"], value["end"]))
    return sweeps, errors


def read_values(path: str) -> tuple[list[str] | None, list[Status]]:
    """One slot value per line; '#' starts a comment."""
    text, errors = read_text(path)
    if text is None:
        return None, errors
    return parse_word_list(text), errors


def read_reference(path: str) -> tuple[dict[str, float] | None, list[Status]]:
    """value<TAB>score rows."""
    rows, errors = read_tsv(path, (2,))
    if rows is None:
        return None, errors
    reference: dict[str, float] = {}
    for line, (value, raw) in rows:
        try:
            reference[value] = float(raw)
        except ValueError:
            errors.append(error(str_resources.err_number.format(path=path, line=line, value=raw)))
    return reference, errors

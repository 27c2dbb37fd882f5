from __future__ import annotations

import math

from rtk.domain.status_level import Status, error, has_errors
from rtk.domain.thesaurus import Thesaurus, ThesaurusEntry

from .file_util import content_lines, read_text, write_tsv
from .infrastructure_resources import str_resources


def _parse_rows(path: str, text: str, check_range: bool) -> tuple[list[tuple[int, ThesaurusEntry]], list[Status]]:
    rows: list[tuple[int, ThesaurusEntry]] = []
    errors: list[Status] = []
    for number, line in content_lines(text):
        fields = line.rstrip("\r").split("\t")
        if len(fields) != 3 or not fields[0] or not fields[1]:
            errors.append(error(str_resources.err_thesaurus_row.format(path=path, line=number)))
            continue
        qt, dt, raw_score = fields
        try:
            score = float(raw_score)
        except ValueError:
            errors.append(error(str_resources.err_thesaurus_score.format(path=path, line=number, score=raw_score)))
            continue
        if not math.isfinite(score) or (check_range and not 0.0 <= score <= 1.0):
            errors.append(error(str_resources.err_thesaurus_range.format(path=path, line=number, score=raw_score)))
            continue
        rows.append((number, ThesaurusEntry(qt, dt, score)))
    return rows, errors


def read_scored_pairs(path: str, check_range: bool = True) -> tuple[list[ThesaurusEntry] | None, list[Status]]:
    """Read qt<TAB>dt<TAB>score rows in file order; blank and '#' lines are skipped."""
    text, errors = read_text(path)
    if text is None:
        return None, errors
    rows, errors = _parse_rows(path, text, check_range)
    return [entry for _, entry in rows], errors


def load_thesaurus(path: str) -> tuple[Thesaurus | None, list[Status]]:
    """Load a thesaurus TSV. An empty file is a valid, empty thesaurus."""
    text, errors = read_text(path)
    if text is None:
        return None, errors
    rows, errors = _parse_rows(path, text, check_range=True)

    first_seen: dict[tuple[str, str], int] = {}
    for line, entry in rows:
        key = (entry.qt, entry.dt)
        if key in first_seen:
            errors.append(error(str_resources.err_thesaurus_duplicate.format(
                path=path, line=line, qt=entry.qt, dt=entry.dt, first=first_seen[key]
            )))
            continue
        first_seen[key] = line
    if has_errors(errors):
        return None, errors
    return Thesaurus(entry for _, entry in rows), errors


def save_thesaurus(thesaurus: Thesaurus, path: str, header_lines: list[str] | None = None) -> int:
    return write_tsv(path, ((e.qt, e.dt, e.score) for e in thesaurus), header_lines or ())

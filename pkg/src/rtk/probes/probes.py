"""Bias probes: slot-replacement grids, appended-character postfix tests and year sweeps.

Documents are mutated as raw text; the scorer analyzes them as usual.
"""

from __future__ import annotations

import math
import re
from collections.abc import Iterable, Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import numpy.typing as npt

from rtk.analysis.analyzer import Analyzer
from rtk.domain.analyzer_config import Term
from rtk.domain.errors import RtkError
from rtk.evaluation.fidelity import pearson
from rtk.evaluation.significance import paired_t_test
from rtk.retrieval.scoring import TextScorer

from .probes_resources import str_resources

SLOT = "{X}"
YEAR_SLOT = "{year}"
DEFAULT_ALPHA = 0.01
DEFAULT_CHARS = tuple("abcdefghijklmnopqrstuvwxyz")


class GridRow(NamedTuple):
    query: str
    template: str
    original_value: str | None = None


@dataclass(frozen=True, eq=False)
class ReplacementGrid:
    rows: list[GridRow]
    columns: list[str]
    # rows x columns
    scores: npt.NDArray[np.float64]
    original_value_index: list[int | None]

    @property
    def column_means(self) -> npt.NDArray[np.float64]:
        return np.asarray(self.scores.mean(axis=0), dtype=np.float64)


class PostfixRow(NamedTuple):
    query: str
    doc: str
    common_term: str


class CharStats(NamedTuple):
    char: str
    mean_delta: float
    std: float
    n: int
    # paired test against the mean delta of the other characters; None when undefined
    t: float | None
    p_value: float | None


@dataclass(frozen=True)
class PostfixReport:
    chars: list[CharStats]
    alpha: float = DEFAULT_ALPHA

    @property
    def bonferroni_alpha(self) -> float:
        return self.alpha / len(self.chars) if self.chars else self.alpha

    def significant(self) -> list[str]:
        return [c.char for c in self.chars if c.p_value is not None and c.p_value < self.bonferroni_alpha]


def _check_template(row: int, template: str) -> None:
    count = template.count(SLOT)
    if count != 1:
        raise RtkError(str_resources.err_template_slot.format(row=row, slot=SLOT, count=count))


def run_replacement_grid(
    scorer: TextScorer, rows: Sequence[GridRow], columns: Sequence[str], threads: int = 1
) -> ReplacementGrid:
    """scores[i][j] = scorer(query_i, template_i with the slot set to columns[j])."""
    for i, row in enumerate(rows):
        _check_template(i, row.template)

    def _score_row(row: GridRow) -> list[float]:
        return [scorer.score_text(row.query, row.template.replace(SLOT, value)) for value in columns]

    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        matrix = list(executor.map(_score_row, rows))

    position = {value: j for j, value in enumerate(columns)}
    return ReplacementGrid(
        rows=list(rows),
        columns=list(columns),
        scores=np.array(matrix, dtype=np.float64).reshape(len(rows), len(columns)),
        original_value_index=[position.get(row.original_value) if row.original_value else None for row in rows],
    )


def grid_bias_correlation(grid: ReplacementGrid, reference: Mapping[str, float]) -> float:
    """Pearson r between the grid's column means and a per-column reference score."""
    if len(grid.columns) < 3:
        raise RtkError(str_resources.err_grid_columns.format(n=len(grid.columns)))
    missing = [c for c in grid.columns if c not in reference]
    if missing:
        raise RtkError(str_resources.err_grid_reference.format(column=missing[0]))
    r = pearson(grid.column_means, np.array([reference[c] for c in grid.columns], dtype=np.float64))
    if r is None:
        raise RtkError(str_resources.err_grid_degenerate)
    return r


def _term_pattern(term: str) -> re.Pattern[str]:
    return re.compile(rf"(?<!\w){re.escape(term)}(?!\w)", re.IGNORECASE)


def _postfix(word: str, char: str) -> str:
    return char.upper() if word.isupper() and len(word) > 1 else char


def _analyzed_term(analyzer: Analyzer, term: str) -> Term | None:
    terms = analyzer.analyze(term)
    return terms[0] if len(terms) == 1 else None


def append_to_term(text: str, term: str, char: str, analyzer: Analyzer | None = None) -> str:
    """Append char to every occurrence of term, uppercased inside all-caps words.

    Without an analyzer an occurrence is a case-insensitive whole word. With one, it
    is any token that analyzes to the same term, so "Cars" matches "car" when stemming.
    """
    if analyzer is None:
        return _term_pattern(term).sub(lambda m: m.group(0) + _postfix(m.group(0), char), text)
    target = _analyzed_term(analyzer, term)
    pieces: list[str] = []
    last = 0
    for start, end, found in analyzer.term_spans(text):
        if found == target:
            pieces += [text[last:end], _postfix(text[start:end], char)]
            last = end
    return "".join(pieces) + text[last:]


def _has_term(text: str, term: str, analyzer: Analyzer | None) -> bool:
    if analyzer is None:
        return _term_pattern(term).search(text) is not None
    target = _analyzed_term(analyzer, term)
    return target is not None and any(found == target for _, _, found in analyzer.term_spans(text))


def run_postfix_probe(
    scorer: TextScorer,
    rows: Sequence[PostfixRow],
    chars: Sequence[str],
    alpha: float = DEFAULT_ALPHA,
    analyzer: Analyzer | None = None,
) -> PostfixReport:
    """Score change when each character is appended to the shared query/document term.

    Pass the scorer's analyzer to locate the common term after analysis; without one
    it must appear in the document as written.
    """
    for char in chars:
        if len(char) != 1:
            raise RtkError(str_resources.err_char.format(char=char))
    for i, row in enumerate(rows):
        if not _has_term(row.doc, row.common_term, analyzer):
            raise RtkError(str_resources.err_common_term_missing.format(row=i, term=row.common_term))
    if not chars:
        return PostfixReport([], alpha)

    deltas = np.array(
        [
            [scorer.score_text(row.query, append_to_term(row.doc, row.common_term, c, analyzer)) - base for c in chars]
            for row, base in ((row, scorer.score_text(row.query, row.doc)) for row in rows)
        ],
        dtype=np.float64,
    ).reshape(len(rows), len(chars))

    stats: list[CharStats] = []
    for j, char in enumerate(chars):
        column = deltas[:, j]
        t: float | None = None
        p: float | None = None
        if len(chars) > 1 and len(rows) > 1:
            others = np.delete(deltas, j, axis=1).mean(axis=1)
            result = paired_t_test(column.tolist(), others.tolist())
            t, p = result.t, result.p_value
        std = float(column.std(ddof=1)) if len(rows) > 1 else 0.0
        mean = float(column.mean()) if len(rows) else math.nan
        stats.append(CharStats(char, mean, std, len(rows), t, p))
    return PostfixReport(stats, alpha)


def run_year_sweep(scorer: TextScorer, query: str, template: str, years: Iterable[int]) -> list[tuple[int, float]]:
    """One score per year, ascending."""
    if YEAR_SLOT not in template:
        raise RtkError(str_resources.err_year_template.format(slot=YEAR_SLOT))
    return [(year, scorer.score_text(query, template.replace(YEAR_SLOT, str(year)))) for year in sorted(set(years))]

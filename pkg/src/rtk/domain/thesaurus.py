from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from types import MappingProxyType
from typing import NamedTuple

from .analyzer_config import Term
from .domain_resources import str_resources

DEFAULT_N_QUERY_TERMS = 10_000
DEFAULT_N_DOC_TERMS = 100_000
DEFAULT_MIN_SCORE = 0.1

_EMPTY_ROW: Mapping[Term, float] = MappingProxyType({})


class ThesaurusEntry(NamedTuple):
    qt: Term
    dt: Term
    score: float


@dataclass(frozen=True)
class CandidateSpec:
    n_query_terms: int = DEFAULT_N_QUERY_TERMS
    n_doc_terms: int = DEFAULT_N_DOC_TERMS
    # entries are kept only when strictly above this score
    min_score: float = DEFAULT_MIN_SCORE

    def __post_init__(self) -> None:
        if self.n_query_terms < 1 or self.n_doc_terms < 1:
            raise ValueError(
                str_resources.err_candidate_counts.format(
                    n_query_terms=self.n_query_terms, n_doc_terms=self.n_doc_terms
                )
            )
        if not 0.0 <= self.min_score <= 1.0:
            raise ValueError(str_resources.err_candidate_min_score.format(min_score=self.min_score))


class Thesaurus:
    """Immutable set of (qt, dt, score) triplets with per-query-term lookup.

    Entries iterate in (qt, dt) order regardless of construction order.
    """

    def __init__(self, entries: Iterable[ThesaurusEntry] = ()) -> None:
        by_qt: dict[Term, dict[Term, float]] = {}
        for entry in entries:
            if not 0.0 <= entry.score <= 1.0:
                raise ValueError(str_resources.err_thesaurus_score.format(**entry._asdict()))
            row = by_qt.setdefault(entry.qt, {})
            if entry.dt in row:
                raise ValueError(str_resources.err_thesaurus_duplicate.format(qt=entry.qt, dt=entry.dt))
            row[entry.dt] = float(entry.score)
        self._by_qt: dict[Term, Mapping[Term, float]] = {
            qt: MappingProxyType(dict(sorted(row.items()))) for qt, row in sorted(by_qt.items())
        }
        self._size = sum(len(row) for row in self._by_qt.values())

    def __len__(self) -> int:
        return self._size

    def __iter__(self) -> Iterator[ThesaurusEntry]:
        for qt, row in self._by_qt.items():
            for dt, score in row.items():
                yield ThesaurusEntry(qt, dt, score)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Thesaurus):
            return NotImplemented
        return list(self) == list(other)

    def __hash__(self) -> int:
        return hash(tuple(self))

    def __repr__(self) -> str:
        return f"Thesaurus({self._size} entries)"

    @property
    def query_terms(self) -> list[Term]:
        return list(self._by_qt)

    def row(self, qt: Term) -> Mapping[Term, float]:
        """Document terms and scores for a query term; empty when qt has no entries."""
        return self._by_qt.get(qt, _EMPTY_ROW)

    def score(self, qt: Term, dt: Term) -> float | None:
        return self._by_qt.get(qt, _EMPTY_ROW).get(dt)

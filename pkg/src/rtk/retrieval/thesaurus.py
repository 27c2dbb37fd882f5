"""Thesaurus queries and construction helpers that need the index."""

from __future__ import annotations

import itertools
from collections.abc import Collection, Iterable, Iterator
from typing import NamedTuple

from rtk.domain.analyzer_config import Term
from rtk.domain.corpus_index import CorpusIndex
from rtk.domain.errors import RtkError
from rtk.domain.thesaurus import CandidateSpec, Thesaurus, ThesaurusEntry

from .index import idf
from .retrieval_resources import str_resources


class WeightedEntry(NamedTuple):
    entry: ThesaurusEntry
    weight: float


def best_match(thesaurus: Thesaurus, qt: Term, doc_terms: Collection[Term]) -> tuple[Term, float] | None:
    """Highest-scoring document term for qt among doc_terms; ties go to the smallest dt."""
    row = thesaurus.row(qt)
    if not row:
        return None
    if len(row) <= len(doc_terms):
        matches = [(dt, s) for dt, s in row.items() if dt in doc_terms]
    else:
        matches = [(dt, row[dt]) for dt in set(doc_terms) if dt in row]
    if not matches:
        return None
    return min(matches, key=lambda m: (-m[1], m[0]))


def top_terms_by_cf(index: CorpusIndex, n: int) -> list[Term]:
    """The n most frequent terms; equal frequencies are ordered lexicographically."""
    return sorted(index.cf, key=lambda t: (-index.cf[t], t))[:n]


def candidate_pairs(index: CorpusIndex, spec: CandidateSpec) -> Iterator[tuple[Term, Term]]:
    """Cross product of frequent query terms and frequent document terms.

    Counts beyond the vocabulary size are truncated silently.
    """
    query_terms = top_terms_by_cf(index, spec.n_query_terms)
    doc_terms = top_terms_by_cf(index, spec.n_doc_terms)
    return itertools.product(query_terms, doc_terms)


def filter_scored_pairs(scored: Iterable[tuple[Term, Term, float]], spec: CandidateSpec) -> Thesaurus:
    """Keep pairs scoring strictly above spec.min_score."""
    kept: list[ThesaurusEntry] = []
    for qt, dt, score in scored:
        if not 0.0 <= score <= 1.0:
            raise RtkError(str_resources.err_pair_score_range.format(score=score, qt=qt, dt=dt))
        if score > spec.min_score:
            kept.append(ThesaurusEntry(qt, dt, score))
    try:
        return Thesaurus(kept)
    except ValueError as e:
        raise RtkError(str(e)) from e


def entry_weight(index: CorpusIndex, entry: ThesaurusEntry) -> float:
    """idf(qt) * cf(qt) * cf(dt) * score: frequent, specific pairs first."""
    return idf(index, entry.qt) * index.cf.get(entry.qt, 0) * index.cf.get(entry.dt, 0) * entry.score


def top_entries(thesaurus: Thesaurus, index: CorpusIndex, k: int) -> list[WeightedEntry]:
    weighted = [WeightedEntry(e, entry_weight(index, e)) for e in thesaurus]
    weighted.sort(key=lambda w: (-w.weight, w.entry.qt, w.entry.dt))
    return weighted[:k]


def expansion_terms(thesaurus: Thesaurus, query_terms: Iterable[Term]) -> set[Term]:
    """Document terms the thesaurus relates to any of the query terms."""
    return {dt for qt in query_terms for dt in thesaurus.row(qt)}

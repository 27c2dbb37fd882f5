"""Supervision records for the two training phases of a partial relevance model."""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Callable, Collection, Iterable, Iterator, Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import NamedTuple

import numpy as np

from rtk.analysis.analyzer import Analyzer, analyzer_for
from rtk.domain.analyzer_config import AnalyzerConfig, Document, Term
from rtk.domain.attention import AttentionTensor
from rtk.domain.corpus_index import CorpusIndex
from rtk.domain.errors import RtkError
from rtk.domain.runs import Triplet
from rtk.domain.segments import Phase1Record, Phase2Record
from rtk.domain.thesaurus import Thesaurus, ThesaurusEntry

from .alignment import aggregate_attention, extract_segments, item_rng, partition_query
from .explain_resources import str_resources

# receives the skipped triplet and a human-readable reason
SkipCallback = Callable[[Triplet, str], None]


class PairScorer(ABC):
    """Term-pair relevance in [0, 1]; None when the pair has no score."""

    @abstractmethod
    def score(self, qt: Term, dt: Term) -> float | None: ...


class ThesaurusPairScorer(PairScorer):
    def __init__(self, thesaurus: Thesaurus) -> None:
        self._thesaurus = thesaurus

    def score(self, qt: Term, dt: Term) -> float | None:
        return self._thesaurus.score(qt, dt)


class ExternalPairScorer(PairScorer):
    """Scores exported by an external pair model as (qt, dt, score) rows."""

    def __init__(self, entries: Iterable[ThesaurusEntry]) -> None:
        self._scores: dict[tuple[Term, Term], float] = {}
        for qt, dt, score in entries:
            if not 0.0 <= score <= 1.0:
                raise RtkError(str_resources.err_pair_score_range.format(score=score))
            self._scores[(qt, dt)] = score

    def score(self, qt: Term, dt: Term) -> float | None:
        return self._scores.get((qt, dt))


def best_scored_term(scorer: PairScorer, qt: Term, doc_terms: Iterable[Term]) -> tuple[Term, float] | None:
    """argmax over scored document terms; ties go to the lexicographically smallest term."""
    best: tuple[Term, float] | None = None
    for dt in sorted(set(doc_terms)):
        score = scorer.score(qt, dt)
        if score is not None and (best is None or score > best[1]):
            best = (dt, score)
    return best


def _unique(terms: Iterable[Term]) -> list[Term]:
    return list(dict.fromkeys(terms))


def full_doc_terms(documents: Iterable[Document], cfg: AnalyzerConfig) -> dict[str, frozenset[Term]]:
    """Each document's terms with stopwords kept, for checking stopword query terms."""
    analyzer = analyzer_for(cfg)
    return {doc.doc_id: frozenset(analyzer.analyze(doc.text, keep_stopwords=True)) for doc in documents}


def _query_terms(analyzer: Analyzer, query: str, with_stopwords: bool) -> list[Term]:
    stopwords = analyzer.cfg.stopwords
    terms = [(analyzer.term(token), token in stopwords) for token in analyzer.tokenize(query)]
    if with_stopwords:
        return _unique(term for term, _ in terms)
    from_stopword = {term for term, is_stopword in terms if is_stopword}
    return _unique(term for term, _ in terms if term not in from_stopword)


def emit_phase2(
    index: CorpusIndex,
    scorer: PairScorer,
    triplets: Iterable[Triplet],
    rng: np.random.Generator,
    on_skip: SkipCallback | None = None,
    doc_terms: Mapping[str, Collection[Term]] | None = None,
) -> Iterator[Phase2Record]:
    """At most one record per triplet: a random query term absent from both documents,
    paired with its best-scoring term in each document.

    With doc_terms (each document's terms, stopwords kept) stopword query terms
    are candidates too. Without it the index's stopword-free view is used and
    query terms that come from stopwords are never chosen.
    """
    analyzer = analyzer_for(index.analyzer)

    def skip(triplet: Triplet, reason: str) -> None:
        if on_skip is not None:
            on_skip(triplet, reason)

    def known(doc_id: str) -> bool:
        return index.has_doc(doc_id) and (doc_terms is None or doc_id in doc_terms)

    def terms_of(doc_id: str) -> Collection[Term]:
        return index.terms_of(doc_id) if doc_terms is None else doc_terms[doc_id]

    for triplet in triplets:
        unknown = [d for d in (triplet.pos_doc_id, triplet.neg_doc_id) if not known(d)]
        if unknown:
            skip(triplet, str_resources.skip_unknown_doc.format(doc_id=unknown[0]))
            continue
        pos_terms = terms_of(triplet.pos_doc_id)
        neg_terms = terms_of(triplet.neg_doc_id)
        q_terms = _query_terms(analyzer, triplet.query, with_stopwords=doc_terms is not None)
        free = [t for t in q_terms if t not in pos_terms and t not in neg_terms]
        if not free:
            skip(triplet, str_resources.skip_no_free_term)
            continue

        qt = free[int(rng.integers(len(free)))]
        best_pos = best_scored_term(scorer, qt, pos_terms)
        best_neg = best_scored_term(scorer, qt, neg_terms)
        if best_pos is None or best_neg is None:
            side = "positive" if best_pos is None else "negative"
            skip(triplet, str_resources.skip_no_candidate.format(qt=qt, side=side))
            continue

        yield Phase2Record(
            qid=triplet.qid,
            qt=qt,
            dt_pos=best_pos[0],
            dt_neg=best_neg[0],
            doc_pos_id=triplet.pos_doc_id,
            doc_neg_id=triplet.neg_doc_id,
            score_pos=best_pos[1],
            score_neg=best_neg[1],
        )


class Phase1Input(NamedTuple):
    qid: str
    pos_doc_id: str
    neg_doc_id: str
    tensor_pos: AttentionTensor
    tensor_neg: AttentionTensor
    teacher_pos: float
    teacher_neg: float
    q_words: Sequence[str] | None = None
    pos_words: Sequence[str] | None = None
    neg_words: Sequence[str] | None = None


def _phase1_record(item: Phase1Input, rng: np.random.Generator, reduction: str) -> Phase1Record:
    n_query_words = aggregate_attention(item.tensor_pos).n_query_words
    q_words = list(item.q_words) if item.q_words is not None else [f"q{i}" for i in range(n_query_words)]
    # one query partition, shared by both documents
    span, _ = partition_query(q_words, rng)
    return Phase1Record(
        qid=item.qid,
        pos_doc_id=item.pos_doc_id,
        neg_doc_id=item.neg_doc_id,
        segments_pos=extract_segments(item.tensor_pos, rng, q_words, item.pos_words, reduction, span),
        segments_neg=extract_segments(item.tensor_neg, rng, q_words, item.neg_words, reduction, span),
        teacher_pos=float(item.teacher_pos),
        teacher_neg=float(item.teacher_neg),
    )


def emit_phase1(
    items: Sequence[Phase1Input], seed: int, reduction: str = "max", threads: int = 1
) -> list[Phase1Record]:
    """Segment pairs for both documents of each triplet; each item draws from its own seeded generator."""
    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        return list(executor.map(lambda i: _phase1_record(items[i], item_rng(seed, i), reduction), range(len(items))))

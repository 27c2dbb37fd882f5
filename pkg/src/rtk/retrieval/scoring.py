"""BM25, BM25T, Dirichlet QL and translation QL (QLT) behind one scorer contract.

BM25T replaces the term frequency of a query term missing from the document
with the best thesaurus score among the document's terms. QLT uses the
thesaurus as translation probabilities, with t(q|q) = 1.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from collections import Counter
from collections.abc import Collection, Mapping, Sequence
from typing import NamedTuple, Protocol, runtime_checkable

from rtk.analysis.analyzer import Analyzer, analyzer_for
from rtk.domain.analyzer_config import Term
from rtk.domain.corpus_index import CorpusIndex
from rtk.domain.errors import MissingScoreError, RtkError
from rtk.domain.params import Bm25Params, QlParams
from rtk.domain.runs import Query, ScoredRun
from rtk.domain.status_level import Status
from rtk.domain.thesaurus import Thesaurus
from rtk.infrastructure.trec_io import read_run

from .index import docs_containing, idf
from .retrieval_resources import str_resources
from .thesaurus import best_match, expansion_terms

SCORER_NAMES = ("bm25", "bm25t", "ql", "qlt", "external")


class QlScore(NamedTuple):
    score: float
    # query terms skipped because they have no collection or translation evidence
    oov_terms: tuple[Term, ...]


# --- term-level arithmetic ---


def length_normalizer(index: CorpusIndex, params: Bm25Params, doc_len: int) -> float:
    """K = k1 * (1 - b + b * |d| / avgdl)."""
    ratio = doc_len / index.avgdl if index.avgdl > 0 else 1.0
    return params.k1 * (1.0 - params.b + params.b * ratio)


def bm25_term_weight(index: CorpusIndex, params: Bm25Params, qt: Term, f: float, norm: float) -> float:
    """IDF(qt) * f * (k1 + 1) / (f + K)."""
    return idf(index, qt) * f * (params.k1 + 1.0) / (f + norm)


def term_evidence(qt: Term, doc_terms: Mapping[Term, int], thesaurus: Thesaurus | None) -> float:
    """tf if qt occurs in the document, else the best thesaurus match score, else 0."""
    tf = doc_terms.get(qt, 0)
    if tf or thesaurus is None:
        return float(tf)
    match = best_match(thesaurus, qt, doc_terms)
    return match[1] if match else 0.0


def translation_mass(qt: Term, doc_terms: Mapping[Term, int], thesaurus: Thesaurus | None, normalize: bool) -> float:
    """tf(qt) + sum of t(qt|w) * tf(w) over thesaurus document terms w present in d."""
    mass = float(doc_terms.get(qt, 0))
    if thesaurus is None:
        return mass
    row = thesaurus.row(qt)
    if len(row) <= len(doc_terms):
        for w, s in row.items():
            if w != qt and w in doc_terms:
                mass += s * doc_terms[w]
    else:
        for w, tf in doc_terms.items():
            if w != qt and w in row:
                mass += row[w] * tf
    if normalize:
        mass /= 1.0 + sum(s for w, s in row.items() if w != qt)
    return mass


def _bm25_sum(
    index: CorpusIndex,
    params: Bm25Params,
    q_terms: Sequence[Term],
    doc_terms: Mapping[Term, int],
    doc_len: int,
    thesaurus: Thesaurus | None = None,
) -> float:
    norm = length_normalizer(index, params, doc_len)
    total = 0.0
    for qt in q_terms:
        f = term_evidence(qt, doc_terms, thesaurus)
        if f > 0.0:
            total += bm25_term_weight(index, params, qt, f, norm)
    return total


def _ql_sum(
    index: CorpusIndex,
    params: QlParams,
    q_terms: Sequence[Term],
    doc_terms: Mapping[Term, int],
    doc_len: int,
    thesaurus: Thesaurus | None = None,
) -> QlScore:
    denominator = doc_len + params.mu
    total = 0.0
    oov: list[Term] = []
    for qt in q_terms:
        mass = translation_mass(qt, doc_terms, thesaurus, params.qlt_normalize)
        background = params.mu * index.collection_probability(qt)
        if mass == 0.0 and background == 0.0:
            oov.append(qt)
            continue
        total += math.log((mass + background) / denominator)
    return QlScore(total, tuple(oov))


# --- functional api ---


def bm25_score(index: CorpusIndex, params: Bm25Params, q: Sequence[Term], doc_id: str) -> float:
    return _bm25_sum(index, params, q, index.terms_of(doc_id), index.doc_len[doc_id])


def bm25t_score(index: CorpusIndex, params: Bm25Params, thesaurus: Thesaurus, q: Sequence[Term], doc_id: str) -> float:
    return _bm25_sum(index, params, q, index.terms_of(doc_id), index.doc_len[doc_id], thesaurus)


def ql_score_detailed(
    index: CorpusIndex, params: QlParams, q: Sequence[Term], doc_id: str, thesaurus: Thesaurus | None = None
) -> QlScore:
    return _ql_sum(index, params, q, index.terms_of(doc_id), index.doc_len[doc_id], thesaurus)


def ql_score(index: CorpusIndex, params: QlParams, q: Sequence[Term], doc_id: str) -> float:
    return ql_score_detailed(index, params, q, doc_id).score


def qlt_score(index: CorpusIndex, params: QlParams, thesaurus: Thesaurus, q: Sequence[Term], doc_id: str) -> float:
    return ql_score_detailed(index, params, q, doc_id, thesaurus).score


# --- scorer contract ---


@runtime_checkable
class TextScorer(Protocol):
    """Scores a query against raw document text; what the probes need."""

    def score_text(self, query: str, doc_text: str) -> float: ...


class Scorer(ABC):
    """Deterministic document scorer. Implementations are immutable and thread-safe."""

    name: str = ""

    @abstractmethod
    def score(self, query: str, doc_id: str) -> float: ...

    def score_batch(self, query: str, doc_ids: Sequence[str]) -> list[float]:
        return [self.score(query, doc_id) for doc_id in doc_ids]

    def query_key(self, query: Query) -> str:
        """What this scorer receives as `query`: the text for lexical scorers."""
        return query.text

    def candidates(self, query: str, index: CorpusIndex) -> Collection[str]:
        """Documents worth scoring for a query; the default is the whole collection."""
        return index.doc_ids


class LexicalScorer(Scorer, ABC):
    def __init__(self, index: CorpusIndex, thesaurus: Thesaurus | None = None) -> None:
        self.index = index
        self.thesaurus = thesaurus
        self._analyzer = analyzer_for(index.analyzer)

    @property
    def analyzer(self) -> Analyzer:
        return self._analyzer

    def analyze_query(self, query: str) -> list[Term]:
        return self._analyzer.analyze(query)

    @abstractmethod
    def score_counts(self, q_terms: Sequence[Term], doc_terms: Mapping[Term, int], doc_len: int) -> float: ...

    def score_terms(self, q_terms: Sequence[Term], doc_id: str) -> float:
        return self.score_counts(q_terms, self.index.terms_of(doc_id), self.index.doc_len[doc_id])

    def score(self, query: str, doc_id: str) -> float:
        return self.score_terms(self.analyze_query(query), doc_id)

    def score_batch(self, query: str, doc_ids: Sequence[str]) -> list[float]:
        q_terms = self.analyze_query(query)
        return [self.score_terms(q_terms, doc_id) for doc_id in doc_ids]

    def score_text(self, query: str, doc_text: str) -> float:
        """Score an unindexed document against this index's collection statistics."""
        terms = self._analyzer.analyze(doc_text)
        return self.score_counts(self.analyze_query(query), Counter(terms), len(terms))

    def candidates(self, query: str, index: CorpusIndex) -> Collection[str]:
        """Postings of the query terms plus postings of their thesaurus document terms."""
        q_terms = set(self.analyze_query(query))
        if self.thesaurus is not None:
            q_terms |= expansion_terms(self.thesaurus, q_terms)
        return docs_containing(index, q_terms)


class Bm25Scorer(LexicalScorer):
    name = "bm25"

    def __init__(self, index: CorpusIndex, params: Bm25Params, thesaurus: Thesaurus | None = None) -> None:
        super().__init__(index, thesaurus)
        self.params = params

    def score_counts(self, q_terms: Sequence[Term], doc_terms: Mapping[Term, int], doc_len: int) -> float:
        return _bm25_sum(self.index, self.params, q_terms, doc_terms, doc_len, self.thesaurus)


class Bm25tScorer(Bm25Scorer):
    name = "bm25t"

    def __init__(self, index: CorpusIndex, params: Bm25Params, thesaurus: Thesaurus) -> None:
        super().__init__(index, params, thesaurus)


class QlScorer(LexicalScorer):
    name = "ql"

    def __init__(self, index: CorpusIndex, params: QlParams, thesaurus: Thesaurus | None = None) -> None:
        super().__init__(index, thesaurus)
        self.params = params

    def score_counts(self, q_terms: Sequence[Term], doc_terms: Mapping[Term, int], doc_len: int) -> float:
        return _ql_sum(self.index, self.params, q_terms, doc_terms, doc_len, self.thesaurus).score

    def detailed(self, query: str, doc_id: str) -> QlScore:
        return ql_score_detailed(self.index, self.params, self.analyze_query(query), doc_id, self.thesaurus)


class QltScorer(QlScorer):
    name = "qlt"

    def __init__(self, index: CorpusIndex, params: QlParams, thesaurus: Thesaurus) -> None:
        super().__init__(index, params, thesaurus)


def lexical_scorer(
    name: str, index: CorpusIndex, bm25: Bm25Params, ql: QlParams, thesaurus: Thesaurus | None = None
) -> LexicalScorer:
    """Scorer by name. bm25 and ql ignore the thesaurus; bm25t and qlt require one."""
    if name == "bm25":
        return Bm25Scorer(index, bm25)
    if name == "ql":
        return QlScorer(index, ql)
    if name not in ("bm25t", "qlt"):
        raise RtkError(str_resources.err_scorer_name.format(name=name))
    if thesaurus is None:
        raise RtkError(str_resources.err_scorer_thesaurus.format(name=name))
    return Bm25tScorer(index, bm25, thesaurus) if name == "bm25t" else QltScorer(index, ql, thesaurus)


class ExternalScorer(Scorer):
    """Scores precomputed by another model, keyed by (qid, doc_id)."""

    name = "external"

    def __init__(self, run: ScoredRun) -> None:
        self._scores = {qid: {doc.doc_id: doc.score for doc in docs} for qid, docs in run.items()}

    def query_key(self, query: Query) -> str:
        return query.qid

    def score(self, query: str, doc_id: str) -> float:
        try:
            return self._scores[query][doc_id]
        except KeyError:
            raise MissingScoreError(query, doc_id) from None

    def candidates(self, query: str, index: CorpusIndex) -> Collection[str]:
        return list(self._scores.get(query, {}))


def external_scorer(run_path: str) -> tuple[ExternalScorer | None, list[Status]]:
    """Load a TREC run as a scorer; duplicate (qid, doc_id) rows are load errors."""
    run, errors = read_run(run_path)
    if run is None or any(s.is_error for s in errors):
        return None, errors
    return ExternalScorer(run), errors


class ExternalTextScorer:
    """Precomputed scores keyed by (query text, document text); used for probes."""

    name = "external"

    def __init__(self, scores: Mapping[tuple[str, str], float]) -> None:
        self._scores = dict(scores)

    def score_text(self, query: str, doc_text: str) -> float:
        try:
            return self._scores[(query, doc_text)]
        except KeyError:
            raise MissingScoreError(query, doc_text[:40]) from None

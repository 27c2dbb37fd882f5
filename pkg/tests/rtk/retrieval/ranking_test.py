from __future__ import annotations

import numpy as np
import pytest

from rtk.analysis.analyzer import default_analyzer_config
from rtk.domain.analyzer_config import Document
from rtk.domain.corpus_index import CorpusIndex
from rtk.domain.errors import RtkError
from rtk.domain.params import Bm25Params
from rtk.domain.runs import Query, RankedDoc
from rtk.retrieval.index import build_index
from rtk.retrieval.ranking import rank, rank_all
from rtk.retrieval.scoring import Bm25Scorer, ExternalScorer, bm25_score


@pytest.fixture
def index() -> CorpusIndex:
    docs = [Document(f"d{i}", text) for i, text in enumerate(["car", "car", "car car", "weather", "sun"], start=1)]
    return build_index_unstemmed(docs)


def build_index_unstemmed(docs: list[Document]) -> CorpusIndex:
    return build_index(docs, default_analyzer_config(stem=False))


def test_rank_orders_by_score_then_doc_id() -> None:
    index = build_index_unstemmed([Document(d, "x") for d in ("d3", "d1", "d2")])
    scorer = ExternalScorer({"q": [RankedDoc("d3", 1.0), RankedDoc("d1", 1.0), RankedDoc("d2", 2.0)]})

    ranking = rank(scorer, index, Query("q", "unused"), k=3)

    assert [d.doc_id for d in ranking] == ["d2", "d1", "d3"]


def test_rank_returns_at_most_candidate_count(index: CorpusIndex) -> None:
    ranking = rank(Bm25Scorer(index, Bm25Params()), index, Query("q", "car"), k=10)

    assert [d.doc_id for d in ranking] == ["d3", "d1", "d2"]


def test_full_scan_scores_every_document(index: CorpusIndex) -> None:
    ranking = rank(Bm25Scorer(index, Bm25Params()), index, Query("q", "car"), k=10, full_scan=True)

    assert len(ranking) == 5
    assert ranking[-2:] == [RankedDoc("d4", 0.0), RankedDoc("d5", 0.0)]


def test_rank_truncates_to_k(index: CorpusIndex) -> None:
    assert len(rank(Bm25Scorer(index, Bm25Params()), index, Query("q", "car"), k=1)) == 1


def test_rank_rejects_non_positive_k(index: CorpusIndex) -> None:
    with pytest.raises(RtkError, match="k must be >= 1"):
        rank(Bm25Scorer(index, Bm25Params()), index, Query("q", "car"), k=0)


def test_rank_all_is_independent_of_thread_count(index: CorpusIndex) -> None:
    queries = [Query(f"q{i}", text) for i, text in enumerate(["car", "weather", "sun car", "nothing"] * 5)]
    scorer = Bm25Scorer(index, Bm25Params())

    single = rank_all(scorer, index, queries, k=3, threads=1)
    many = rank_all(scorer, index, queries, k=3, threads=8)

    assert single == many
    assert list(many) == [q.qid for q in queries]
    assert many["q3"] == []


# --- brute force ---


_WORDS = ("car", "truck", "road", "ford", "honda", "fast", "sun", "rain")


def test_rank_matches_brute_force_score_and_sort() -> None:
    rng = np.random.default_rng(31)
    params = Bm25Params()
    for _ in range(40):
        docs = [
            Document(f"d{i:02d}", " ".join(rng.choice(_WORDS, size=int(rng.integers(1, 6)))))
            for i in range(int(rng.integers(1, 21)))
        ]
        index = build_index_unstemmed(docs)
        q_terms = [str(w) for w in rng.choice(_WORDS, size=int(rng.integers(1, 4)))]
        k = int(rng.integers(1, 25))

        matching = [d.doc_id for d in docs if set(d.text.split()) & set(q_terms)]
        expected = sorted(
            (RankedDoc(d, bm25_score(index, params, q_terms, d)) for d in matching),
            key=lambda r: (-r.score, r.doc_id),
        )[:k]

        assert rank(Bm25Scorer(index, params), index, Query("q", " ".join(q_terms)), k=k) == expected

from __future__ import annotations

import heapq
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

from rtk.domain.corpus_index import CorpusIndex
from rtk.domain.errors import RtkError
from rtk.domain.runs import Query, RankedDoc, ScoredRun, ranking_key

from .retrieval_resources import str_resources
from .scoring import Scorer


def rank(scorer: Scorer, index: CorpusIndex, query: Query, k: int, full_scan: bool = False) -> list[RankedDoc]:
    """Top-k documents by descending score, ties by ascending doc_id.

    Only the scorer's candidate set is scored unless full_scan is set.
    """
    if k < 1:
        raise RtkError(str_resources.err_rank_k.format(k=k))
    key = scorer.query_key(query)
    doc_ids = index.doc_ids if full_scan else sorted(scorer.candidates(key, index))
    scores = scorer.score_batch(key, doc_ids)
    return heapq.nsmallest(k, map(RankedDoc, doc_ids, scores), key=ranking_key)


def rank_all(
    scorer: Scorer,
    index: CorpusIndex,
    queries: Sequence[Query],
    k: int,
    full_scan: bool = False,
    threads: int = 1,
) -> ScoredRun:
    """Rank every query; the result keeps query order whatever the thread count."""
    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        rankings = list(executor.map(lambda q: rank(scorer, index, q, k, full_scan), queries))
    return {query.qid: ranking for query, ranking in zip(queries, rankings, strict=True)}

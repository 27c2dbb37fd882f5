from __future__ import annotations

from typing import NamedTuple, TypeAlias


class Query(NamedTuple):
    qid: str
    text: str


class RankedDoc(NamedTuple):
    doc_id: str
    score: float


# qid -> ranked list, descending score, unique doc ids
ScoredRun: TypeAlias = dict[str, list[RankedDoc]]

# qid -> doc_id -> grade (>= 0)
Qrels: TypeAlias = dict[str, dict[str, int]]


def ranking_key(doc: RankedDoc) -> tuple[float, str]:
    """Sort key for the canonical order: descending score, then ascending doc_id."""
    return (-doc.score, doc.doc_id)


def sort_ranking(docs: list[RankedDoc]) -> list[RankedDoc]:
    return sorted(docs, key=ranking_key)


class Triplet(NamedTuple):
    qid: str
    query: str
    pos_doc_id: str
    neg_doc_id: str

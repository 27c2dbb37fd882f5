"""Ranking effectiveness: MRR and NDCG over TREC runs and qrels."""

from __future__ import annotations

import math
import re
from collections.abc import Callable
from dataclasses import dataclass

from rtk.domain.errors import RtkError
from rtk.domain.runs import Qrels, RankedDoc, ScoredRun

from .evaluation_resources import str_resources

DEFAULT_CUTOFF = 10
EFFECTIVENESS_METRICS = ("mrr", "ndcg")

_METRIC_NAME = re.compile(r"^([a-z]+)(?:@(\d+))?$")


@dataclass(frozen=True)
class MetricResult:
    value: float
    per_query: dict[str, float]
    # run queries without qrels, excluded from the mean
    skipped: tuple[str, ...] = ()
    # queries scored 0 because nothing is relevant
    flagged: tuple[str, ...] = ()


def parse_metric_name(name: str, choices: tuple[str, ...], default_k: int | None = None) -> tuple[str, int | None]:
    """'ndcg@10' -> ('ndcg', 10); a bare name takes default_k."""
    match = _METRIC_NAME.match(name.strip().lower())
    if match is None or match.group(1) not in choices:
        raise RtkError(str_resources.err_metric_name.format(name=name, choices=", ".join(choices)))
    k = int(match.group(2)) if match.group(2) else default_k
    if k is not None and k < 1:
        raise RtkError(str_resources.err_cutoff.format(k=k))
    return match.group(1), k


def _mean(values: list[float]) -> float:
    return math.fsum(values) / len(values) if values else 0.0


def _evaluate(
    run: ScoredRun, qrels: Qrels, per_query: Callable[[list[RankedDoc], dict[str, int]], float | None]
) -> MetricResult:
    scores: dict[str, float] = {}
    skipped: list[str] = []
    flagged: list[str] = []
    for qid in sorted(run):
        judged = qrels.get(qid)
        if judged is None:
            skipped.append(qid)
            continue
        value = per_query(run[qid], judged)
        if value is None:
            flagged.append(qid)
            value = 0.0
        scores[qid] = value
    return MetricResult(_mean(list(scores.values())), scores, tuple(skipped), tuple(flagged))


def reciprocal_rank(ranking: list[RankedDoc], judged: dict[str, int], cutoff: int) -> float:
    for rank, doc in enumerate(ranking[:cutoff], start=1):
        if judged.get(doc.doc_id, 0) >= 1:
            return 1.0 / rank
    return 0.0


def mrr(run: ScoredRun, qrels: Qrels, cutoff: int = DEFAULT_CUTOFF) -> MetricResult:
    if cutoff < 1:
        raise RtkError(str_resources.err_cutoff.format(k=cutoff))
    return _evaluate(run, qrels, lambda ranking, judged: reciprocal_rank(ranking, judged, cutoff))


def _dcg(grades: list[int]) -> float:
    return math.fsum((2.0**g - 1.0) / math.log2(rank + 1) for rank, g in enumerate(grades, start=1))


def ndcg_at(ranking: list[RankedDoc], judged: dict[str, int], k: int) -> float | None:
    """None when the query has no relevant document."""
    ideal = _dcg(sorted(judged.values(), reverse=True)[:k])
    if ideal == 0.0:
        return None
    return _dcg([judged.get(doc.doc_id, 0) for doc in ranking[:k]]) / ideal


def ndcg(run: ScoredRun, qrels: Qrels, k: int = DEFAULT_CUTOFF) -> MetricResult:
    if k < 1:
        raise RtkError(str_resources.err_cutoff.format(k=k))
    return _evaluate(run, qrels, lambda ranking, judged: ndcg_at(ranking, judged, k))


def evaluate_effectiveness(name: str, run: ScoredRun, qrels: Qrels, default_cutoff: int = DEFAULT_CUTOFF) -> MetricResult:
    metric, k = parse_metric_name(name, EFFECTIVENESS_METRICS, default_cutoff)
    cutoff = k or default_cutoff
    return mrr(run, qrels, cutoff) if metric == "mrr" else ndcg(run, qrels, cutoff)

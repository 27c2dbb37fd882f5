"""Agreement between an explanation model's scores and a target model's scores.

Each metric is computed per query over the documents both runs scored, then
averaged over the queries where it is defined.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import numpy.typing as npt
from scipy.stats import kendalltau, pearsonr

from rtk.domain.errors import RtkError
from rtk.domain.runs import RankedDoc, ScoredRun, sort_ranking

from .evaluation_resources import str_resources
from .metrics import parse_metric_name

FIDELITY_METRICS = ("pearson", "kendall", "topk", "pairwise")
DEFAULT_TOPK = 10
DEFAULT_DEPTH = 1000

Vector = npt.NDArray[np.float64]


class AlignedQuery(NamedTuple):
    qid: str
    doc_ids: list[str]
    e: Vector
    b: Vector
    # docs scored by only one of the runs
    uncovered: int


@dataclass(frozen=True)
class FidelityResult:
    value: float
    per_query: dict[str, float]
    # queries where the metric is undefined (no overlap, constant scores, no comparable pairs)
    skipped: tuple[str, ...] = ()
    # queries where the runs covered different documents
    partial: tuple[str, ...] = ()


def truncate_run(run: ScoredRun, depth: int, reference: ScoredRun | None = None) -> ScoredRun:
    """Keep the top-depth documents per query, or only those in the reference run's top-depth."""
    if depth < 1:
        raise RtkError(str_resources.err_cutoff.format(k=depth))
    if reference is None:
        return {qid: docs[:depth] for qid, docs in run.items()}
    allowed = {qid: {d.doc_id for d in docs[:depth]} for qid, docs in reference.items()}
    return {qid: [d for d in docs if d.doc_id in allowed.get(qid, set())] for qid, docs in run.items()}


def align_runs(run_e: ScoredRun, run_b: ScoredRun) -> Iterator[AlignedQuery]:
    for qid in sorted(set(run_e) & set(run_b)):
        e_scores = {d.doc_id: d.score for d in run_e[qid]}
        b_scores = {d.doc_id: d.score for d in run_b[qid]}
        shared = sorted(e_scores.keys() & b_scores.keys())
        yield AlignedQuery(
            qid,
            shared,
            np.array([e_scores[d] for d in shared], dtype=np.float64),
            np.array([b_scores[d] for d in shared], dtype=np.float64),
            len(e_scores.keys() ^ b_scores.keys()),
        )


def _average(
    run_e: ScoredRun, run_b: ScoredRun, per_query: Callable[[AlignedQuery], float | None]
) -> FidelityResult:
    values: dict[str, float] = {}
    skipped: list[str] = []
    partial: list[str] = []
    for aligned in align_runs(run_e, run_b):
        if aligned.uncovered:
            partial.append(aligned.qid)
        value = per_query(aligned) if aligned.doc_ids else None
        if value is None:
            skipped.append(aligned.qid)
            continue
        values[aligned.qid] = value
    mean = math.fsum(values.values()) / len(values) if values else 0.0
    return FidelityResult(mean, values, tuple(skipped), tuple(partial))


def _degenerate(e: Vector, b: Vector) -> bool:
    return len(e) < 2 or np.ptp(e) == 0.0 or np.ptp(b) == 0.0


def pearson(e: Vector, b: Vector) -> float | None:
    if _degenerate(e, b):
        return None
    return float(pearsonr(e, b).statistic)


def _pair_signs(values: Vector) -> Vector:
    upper = np.triu_indices(len(values), k=1)
    return np.sign(values[:, None] - values[None, :])[upper]


def kendall_tau_b(e: Vector, b: Vector) -> float | None:
    """Tie-corrected Kendall rank correlation; undefined when either side is constant."""
    if _degenerate(e, b):
        return None
    return float(kendalltau(e, b, variant="b").statistic)


def pairwise_agreement(e: Vector, b: Vector) -> float | None:
    """Share of concordant pairs among pairs strictly ordered by both runs."""
    se, sb = _pair_signs(e), _pair_signs(b)
    comparable = (se != 0) & (sb != 0)
    total = int(np.count_nonzero(comparable))
    if total == 0:
        return None
    return int(np.count_nonzero(se[comparable] == sb[comparable])) / total


def _top_ids(doc_ids: list[str], scores: Vector, k: int) -> set[str]:
    ranking = sort_ranking([RankedDoc(d, float(s)) for d, s in zip(doc_ids, scores, strict=True)])
    return {doc.doc_id for doc in ranking[:k]}


def topk_overlap_of(aligned: AlignedQuery, k: int) -> float:
    """|top_k(e) & top_k(b)| / min(k, n)."""
    n = len(aligned.doc_ids)
    shared = _top_ids(aligned.doc_ids, aligned.e, k) & _top_ids(aligned.doc_ids, aligned.b, k)
    return len(shared) / min(k, n)


def fidelity_pearson(run_e: ScoredRun, run_b: ScoredRun) -> FidelityResult:
    return _average(run_e, run_b, lambda a: pearson(a.e, a.b))


def fidelity_kendall(run_e: ScoredRun, run_b: ScoredRun) -> FidelityResult:
    return _average(run_e, run_b, lambda a: kendall_tau_b(a.e, a.b))


def topk_overlap(run_e: ScoredRun, run_b: ScoredRun, k: int = DEFAULT_TOPK) -> FidelityResult:
    if k < 1:
        raise RtkError(str_resources.err_cutoff.format(k=k))
    return _average(run_e, run_b, lambda a: topk_overlap_of(a, k))


def fidelity_pairwise(run_e: ScoredRun, run_b: ScoredRun) -> FidelityResult:
    return _average(run_e, run_b, lambda a: pairwise_agreement(a.e, a.b))


def evaluate_fidelity(name: str, run_e: ScoredRun, run_b: ScoredRun) -> FidelityResult:
    metric, k = parse_metric_name(name, FIDELITY_METRICS, DEFAULT_TOPK)
    if metric == "pearson":
        return fidelity_pearson(run_e, run_b)
    if metric == "kendall":
        return fidelity_kendall(run_e, run_b)
    if metric == "pairwise":
        return fidelity_pairwise(run_e, run_b)
    return topk_overlap(run_e, run_b, k or DEFAULT_TOPK)

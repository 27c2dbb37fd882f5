"""Training losses and the BM25T loss surface with respect to one pair score."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from typing import NamedTuple

from rtk.domain.analyzer_config import Term
from rtk.domain.corpus_index import CorpusIndex
from rtk.domain.errors import RtkError
from rtk.domain.params import Bm25Params
from rtk.domain.segments import Phase1Record
from rtk.domain.thesaurus import Thesaurus
from rtk.retrieval.index import idf
from rtk.retrieval.scoring import bm25_term_weight, length_normalizer, term_evidence

from .explain_resources import str_resources

# (query words, document words) -> partial relevance score
PartialScorer = Callable[[Sequence[str], Sequence[str]], float]


class LossSurface(NamedTuple):
    loss: float
    # d loss / d pair_score
    gradient: float


def margin_mse(se_pos: float, se_neg: float, sb_pos: float, sb_neg: float) -> float:
    """Squared difference between the student and teacher score margins."""
    return ((se_pos - se_neg) - (sb_pos - sb_neg)) ** 2


def hinge_loss(se_pos: float, se_neg: float) -> float:
    return max(0.0, 1.0 - se_pos + se_neg)


def combine_partial_scores(first: float, second: float) -> float:
    """Full-pair score from the (q1, d1) and (q2, d2) partial scores."""
    return first + second


def margin_mse_for_records(records: Iterable[Phase1Record], partial: PartialScorer) -> list[float]:
    losses: list[float] = []
    for record in records:
        se = [
            combine_partial_scores(partial(seg.q1, seg.d1), partial(seg.q2, seg.d2))
            for seg in (record.segments_pos, record.segments_neg)
        ]
        losses.append(margin_mse(se[0], se[1], record.teacher_pos, record.teacher_neg))
    return losses


def _injected_score(
    index: CorpusIndex,
    params: Bm25Params,
    q: Sequence[Term],
    doc_id: str,
    qt: Term,
    injected: float | None,
    thesaurus: Thesaurus | None,
) -> tuple[float, float]:
    """BM25T score with f(qt, d) forced to `injected`, and d score / d injected."""
    doc_terms = index.terms_of(doc_id)
    norm = length_normalizer(index, params, index.doc_len[doc_id])
    total = 0.0
    derivative = 0.0
    for term in q:
        if term == qt and injected is not None:
            f = injected
            if f + norm > 0.0:
                derivative += idf(index, qt) * (params.k1 + 1.0) * norm / (f + norm) ** 2
        else:
            f = term_evidence(term, doc_terms, thesaurus)
        if f > 0.0:
            total += bm25_term_weight(index, params, term, f, norm)
    return total, derivative


def bm25t_loss_surface(
    index: CorpusIndex,
    params: Bm25Params,
    q: Sequence[Term],
    d_pos: str,
    d_neg: str,
    qt: Term,
    pair_score: float,
    thesaurus: Thesaurus | None = None,
    neg_pair_score: float | None = None,
) -> LossSurface:
    """Hinge loss of BM25T scores with f(qt, d_pos) = pair_score, and its derivative.

    neg_pair_score, when given, fixes f(qt, d_neg) as a constant.
    """
    if not 0.0 <= pair_score <= 1.0:
        raise RtkError(str_resources.err_pair_score_range.format(score=pair_score))
    if qt not in q:
        raise RtkError(str_resources.err_qt_not_in_query.format(qt=qt))
    if index.tf(qt, d_pos) > 0:
        raise RtkError(str_resources.err_qt_in_doc.format(qt=qt))

    s_pos, ds_pos = _injected_score(index, params, q, d_pos, qt, pair_score, thesaurus)
    neg_injected = neg_pair_score if neg_pair_score is not None and index.tf(qt, d_neg) == 0 else None
    s_neg, _ = _injected_score(index, params, q, d_neg, qt, neg_injected, thesaurus)

    loss = hinge_loss(s_pos, s_neg)
    return LossSurface(loss, -ds_pos if loss > 0.0 else 0.0)

from __future__ import annotations

import numpy as np
import pytest

from rtk.analysis.analyzer import default_analyzer_config
from rtk.domain.analyzer_config import Document
from rtk.domain.corpus_index import CorpusIndex
from rtk.domain.errors import RtkError
from rtk.domain.params import Bm25Params
from rtk.domain.segments import Phase1Record, QuerySpan, SegmentPair
from rtk.explain.losses import (
    bm25t_loss_surface,
    combine_partial_scores,
    hinge_loss,
    margin_mse,
    margin_mse_for_records,
)
from rtk.retrieval.index import build_index


@pytest.fixture
def index() -> CorpusIndex:
    docs = [
        Document("pos", "vehicle dealer sells vehicle weekly"),
        Document("neg", "weather tomorrow looks sunny"),
        Document("exact", "car dealer"),
        Document("other", "car repair shop open late"),
    ]
    return build_index(docs, default_analyzer_config(stem=False))


# --- closed forms ---


def test_margin_mse_and_hinge_closed_forms() -> None:
    rng = np.random.default_rng(1)
    for se_pos, se_neg, sb_pos, sb_neg in rng.normal(0, 3, size=(1000, 4)):
        assert margin_mse(se_pos, se_neg, sb_pos, sb_neg) == pytest.approx((se_pos - se_neg - sb_pos + sb_neg) ** 2)
        assert hinge_loss(se_pos, se_neg) == pytest.approx(max(0.0, 1.0 - (se_pos - se_neg)))


def test_losses_vanish_when_margins_agree() -> None:
    assert margin_mse(3.0, 1.0, 5.0, 3.0) == 0.0
    assert hinge_loss(2.5, 0.5) == 0.0


def test_full_pair_score_is_the_sum_of_partial_scores() -> None:
    assert combine_partial_scores(1.25, -0.5) == pytest.approx(0.75)
    assert combine_partial_scores(0.0, 0.0) == 0.0


def test_margin_mse_for_records_sums_partial_scores() -> None:
    segments = SegmentPair(("a", "b"), QuerySpan(0, 1, 2), ("x", "y"), (True, False), (False, True), 1, 1)
    record = Phase1Record("q", "p", "n", segments, segments, teacher_pos=4.0, teacher_neg=1.0)

    def partial(query: list[str] | tuple[str, ...], doc: list[str] | tuple[str, ...]) -> float:
        return float(len(query) + len(doc))

    # both documents share segments, so the student margin is zero
    assert margin_mse_for_records([record], partial) == [9.0]


# --- loss surface ---


def _surface(index: CorpusIndex, params: Bm25Params, score: float) -> float:
    return bm25t_loss_surface(index, params, ["car", "dealer"], "pos", "neg", "car", score).loss


def test_gradient_matches_central_differences(index: CorpusIndex) -> None:
    rng = np.random.default_rng(3)
    h = 1e-6
    checked = 0
    while checked < 100:
        params = Bm25Params(k1=float(rng.uniform(0.2, 2.5)), b=float(rng.uniform(0.0, 1.0)))
        score = float(rng.uniform(0.05, 0.95))
        surface = bm25t_loss_surface(index, params, ["car", "dealer"], "pos", "neg", "car", score)
        if min(_surface(index, params, score - h), _surface(index, params, score + h)) <= 1e-3:
            continue
        numeric = (_surface(index, params, score + h) - _surface(index, params, score - h)) / (2 * h)
        assert surface.gradient == pytest.approx(numeric, rel=1e-5)
        assert surface.gradient < 0
        checked += 1


def test_gradient_is_zero_where_hinge_is_flat(index: CorpusIndex) -> None:
    surface = bm25t_loss_surface(
        index, Bm25Params(k1=2.0, b=0.0), ["car", "dealer", "vehicle", "sells"], "pos", "neg", "car", 1.0
    )

    assert surface.loss == 0.0
    assert surface.gradient == 0.0


def test_loss_decreases_as_pair_score_grows(index: CorpusIndex) -> None:
    params = Bm25Params()
    losses = [_surface(index, params, s) for s in (0.0, 0.25, 0.5, 0.75, 1.0)]

    assert losses == sorted(losses, reverse=True)


def test_surface_preconditions(index: CorpusIndex) -> None:
    params = Bm25Params()

    with pytest.raises(RtkError, match=r"pair_score must be in \[0, 1\]"):
        bm25t_loss_surface(index, params, ["car"], "pos", "neg", "car", 1.5)
    with pytest.raises(RtkError, match="not part of the analyzed query"):
        bm25t_loss_surface(index, params, ["dealer"], "pos", "neg", "car", 0.5)
    with pytest.raises(RtkError, match="occurs in the positive document"):
        bm25t_loss_surface(index, params, ["car"], "exact", "neg", "car", 0.5)

"""Cross-encoder attention to word affinity, and partial-segment sampling.

Token layout is [CLS] q_1..q_n [SEP] d_1..d_m [SEP]; other layouts are rejected.
"""

from __future__ import annotations

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import numpy.typing as npt

from rtk.domain.attention import SPECIAL_TOKEN, AffinityMatrix, AttentionTensor
from rtk.domain.errors import RtkError
from rtk.domain.segments import QuerySpan, SegmentPair

from .explain_resources import str_resources

ROW_SUM_TOLERANCE = 1e-4
REDUCTIONS = ("max", "sum")


def _check_word_ids(ids: npt.NDArray[np.int64], segment: str) -> None:
    steps = np.diff(ids)
    if ids[0] != 0 or np.any((steps < 0) | (steps > 1)):
        raise RtkError(str_resources.err_attn_word_order.format(segment=segment))


def validate_tensor(tensor: AttentionTensor) -> None:
    values, word_ids = tensor.values, tensor.word_ids
    if values.ndim != 4 or values.shape[2] != values.shape[3]:
        raise RtkError(str_resources.err_attn_shape.format(shape=values.shape))
    seq_len = tensor.seq_len
    if word_ids.shape != (seq_len,):
        raise RtkError(str_resources.err_attn_word_ids.format(L=seq_len, n=len(word_ids)))
    if tensor.q_len < 1 or tensor.d_len < 1 or seq_len != tensor.q_len + tensor.d_len + 3:
        raise RtkError(str_resources.err_attn_layout.format(L=seq_len, q_len=tensor.q_len, d_len=tensor.d_len))

    expected = [0, tensor.q_len + 1, seq_len - 1]
    found = np.flatnonzero(word_ids == SPECIAL_TOKEN).tolist()
    if found != expected:
        raise RtkError(str_resources.err_attn_specials.format(expected=expected, found=found))
    _check_word_ids(word_ids[_query_slice(tensor)], "query")
    _check_word_ids(word_ids[_doc_slice(tensor)], "document")

    if not np.all(np.isfinite(values)):
        raise RtkError(str_resources.err_attn_not_finite)
    worst = float(np.max(np.abs(values.sum(axis=-1) - 1.0)))
    if worst > ROW_SUM_TOLERANCE:
        raise RtkError(str_resources.err_attn_row_sums.format(tol=ROW_SUM_TOLERANCE, worst=worst))


def _query_slice(tensor: AttentionTensor) -> slice:
    return slice(1, tensor.q_len + 1)


def _doc_slice(tensor: AttentionTensor) -> slice:
    start = tensor.q_len + 2
    return slice(start, start + tensor.d_len)


def _word_starts(ids: npt.NDArray[np.int64]) -> npt.NDArray[np.intp]:
    return np.flatnonzero(np.r_[True, ids[1:] != ids[:-1]])


def word_counts(tensor: AttentionTensor) -> tuple[int, int]:
    """Number of query and document words after subword grouping."""
    return (
        int(tensor.word_ids[_query_slice(tensor)].max()) + 1,
        int(tensor.word_ids[_doc_slice(tensor)].max()) + 1,
    )


def subword_affinity(tensor: AttentionTensor) -> npt.NDArray[np.float64]:
    """A[q->d] + A[d->q]^T over subword tokens, A averaged over layers and heads."""
    mean = tensor.values.mean(axis=(0, 1))
    q, d = _query_slice(tensor), _doc_slice(tensor)
    return np.asarray(mean[q, d] + mean[d, q].T, dtype=np.float64)


def aggregate_attention(tensor: AttentionTensor) -> AffinityMatrix:
    """Word-level affinity: the maximum over each pair of words' subword scores."""
    validate_tensor(tensor)
    sub = subword_affinity(tensor)
    q_starts = _word_starts(tensor.word_ids[_query_slice(tensor)])
    d_starts = _word_starts(tensor.word_ids[_doc_slice(tensor)])
    pooled = np.maximum.reduceat(np.maximum.reduceat(sub, q_starts, axis=0), d_starts, axis=1)
    return AffinityMatrix(pooled)


def partition_query(q_words: Sequence[str], rng: np.random.Generator) -> tuple[QuerySpan, list[str]]:
    """Pick q1 uniformly among all proper contiguous spans; q2 keeps a mask where q1 was."""
    n = len(q_words)
    if n < 2:
        raise RtkError(str_resources.err_query_too_short.format(n=n))
    spans = [(start, end) for start in range(n) for end in range(start + 1, n + 1) if end - start < n]
    start, end = spans[int(rng.integers(len(spans)))]
    span = QuerySpan(start, end, n)
    return span, span.q2(list(q_words))


def deletion_count_samples(
    d_len: int, rng: np.random.Generator, size: int
) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.int64]]:
    """Draw Normal(d/2, d/2) and round/clip into [1, d-1]. Returns (raw draws, counts)."""
    if d_len < 2:
        raise RtkError(str_resources.err_doc_too_short.format(n=d_len))
    half = d_len / 2.0
    raw = rng.normal(half, half, size)
    counts = np.clip(np.rint(raw), 1, d_len - 1).astype(np.int64)
    return raw, counts


def sample_deletion_count(d_len: int, rng: np.random.Generator) -> int:
    _, counts = deletion_count_samples(d_len, rng, 1)
    return int(counts[0])


def partition_relevance(
    affinity: AffinityMatrix, rows: Sequence[int], reduction: str = "max"
) -> npt.NDArray[np.float64]:
    """Per document word, the affinity to the given query words reduced by max or sum."""
    block = affinity.scores[list(rows), :]
    if reduction == "max":
        return np.asarray(block.max(axis=0), dtype=np.float64)
    if reduction == "sum":
        return np.asarray(block.sum(axis=0), dtype=np.float64)
    raise RtkError(str_resources.err_reduction.format(name=reduction))


def deletion_mask(relevance: npt.NDArray[np.float64], m: int) -> tuple[bool, ...]:
    """Keep-mask deleting the m lowest-relevance words; among equals the higher index goes first."""
    positions = np.arange(len(relevance))
    order = np.lexsort((-positions, relevance))
    keep = np.ones(len(relevance), dtype=bool)
    keep[order[:m]] = False
    return tuple(bool(k) for k in keep)


def build_segments(
    affinity: AffinityMatrix,
    span: QuerySpan,
    q_words: Sequence[str],
    d_words: Sequence[str],
    rng: np.random.Generator,
    reduction: str = "max",
) -> SegmentPair:
    """Delete low-affinity document words independently for q1 and q2; d1 and d2 may overlap."""
    if affinity.n_query_words != span.length or affinity.n_doc_words != len(d_words) or len(q_words) != span.length:
        raise RtkError(str_resources.err_affinity_dims.format(
            rows=affinity.n_query_words, cols=affinity.n_doc_words, q=len(q_words), d=len(d_words)
        ))
    if len(d_words) < 2:
        raise RtkError(str_resources.err_doc_too_short.format(n=len(d_words)))

    q1_rows = range(span.start, span.end)
    q2_rows = [i for i in range(span.length) if not span.contains(i)]
    m1 = sample_deletion_count(len(d_words), rng)
    m2 = sample_deletion_count(len(d_words), rng)
    return SegmentPair(
        q_words=tuple(q_words),
        span=span,
        d_words=tuple(d_words),
        d1_keep=deletion_mask(partition_relevance(affinity, q1_rows, reduction), m1),
        d2_keep=deletion_mask(partition_relevance(affinity, q2_rows, reduction), m2),
        m1=m1,
        m2=m2,
    )


def _words_or_labels(words: Sequence[str] | None, count: int, prefix: str, segment: str) -> list[str]:
    if words is None:
        return [f"{prefix}{i}" for i in range(count)]
    if len(words) != count:
        raise RtkError(str_resources.err_word_count.format(segment=segment, expected=count, got=len(words)))
    return list(words)


def extract_segments(
    tensor: AttentionTensor,
    rng: np.random.Generator,
    q_words: Sequence[str] | None = None,
    d_words: Sequence[str] | None = None,
    reduction: str = "max",
    span: QuerySpan | None = None,
) -> SegmentPair:
    """Tensor to SegmentPair. Missing words are labelled q0.. and d0..; a given span is reused."""
    affinity = aggregate_attention(tensor)
    q_count, d_count = affinity.n_query_words, affinity.n_doc_words
    query = _words_or_labels(q_words, q_count, "q", "query")
    doc = _words_or_labels(d_words, d_count, "d", "document")
    if span is None:
        span, _ = partition_query(query, rng)
    return build_segments(affinity, span, query, doc, rng, reduction)


def item_rng(seed: int, item: int) -> np.random.Generator:
    """Independent generator per work item, so results do not depend on scheduling."""
    return np.random.default_rng([seed, item])


def extract_all(
    tensors: Sequence[AttentionTensor],
    seed: int,
    words: Sequence[tuple[Sequence[str], Sequence[str]] | None] | None = None,
    reduction: str = "max",
    threads: int = 1,
) -> list[SegmentPair]:
    items = list(words) if words is not None else [None] * len(tensors)

    def _extract(i: int) -> SegmentPair:
        pair = items[i]
        q_words, d_words = pair if pair is not None else (None, None)
        return extract_segments(tensors[i], item_rng(seed, i), q_words, d_words, reduction)

    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        return list(executor.map(_extract, range(len(tensors))))

"""Partial-segment and training-record types emitted by the explain layer."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .analyzer_config import Term
from .domain_resources import str_resources

MASK_TOKEN = "[MASK]"


@dataclass(frozen=True)
class QuerySpan:
    """Half-open [start, end) word span of a query."""

    start: int
    end: int
    length: int

    def __post_init__(self) -> None:
        proper = 0 <= self.start < self.end <= self.length and (self.end - self.start) < self.length
        if not proper:
            raise ValueError(
                str_resources.err_segment_span.format(start=self.start, end=self.end, length=self.length)
            )

    def q1(self, words: tuple[str, ...] | list[str]) -> list[str]:
        return list(words[self.start : self.end])

    def q2(self, words: tuple[str, ...] | list[str]) -> list[str]:
        """Remaining words with one placeholder at the excision point."""
        return [*words[: self.start], MASK_TOKEN, *words[self.end :]]

    def contains(self, index: int) -> bool:
        return self.start <= index < self.end


@dataclass(frozen=True)
class SegmentPair:
    q_words: tuple[str, ...]
    span: QuerySpan
    d_words: tuple[str, ...]
    # keep-masks over document words; True means the word survives
    d1_keep: tuple[bool, ...]
    d2_keep: tuple[bool, ...]
    m1: int
    m2: int

    @property
    def q1(self) -> list[str]:
        return self.span.q1(self.q_words)

    @property
    def q2(self) -> list[str]:
        return self.span.q2(self.q_words)

    @property
    def d1(self) -> list[str]:
        return [w for w, keep in zip(self.d_words, self.d1_keep, strict=True) if keep]

    @property
    def d2(self) -> list[str]:
        return [w for w, keep in zip(self.d_words, self.d2_keep, strict=True) if keep]

    def to_dict(self) -> dict[str, Any]:
        return {
            "q1": self.q1,
            "q2": self.q2,
            "q1_span": [self.span.start, self.span.end],
            "d1": self.d1,
            "d2": self.d2,
            "d1_mask": [int(k) for k in self.d1_keep],
            "d2_mask": [int(k) for k in self.d2_keep],
            "m1": self.m1,
            "m2": self.m2,
        }


@dataclass(frozen=True)
class Phase1Record:
    qid: str
    pos_doc_id: str
    neg_doc_id: str
    segments_pos: SegmentPair
    segments_neg: SegmentPair
    teacher_pos: float
    teacher_neg: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "qid": self.qid,
            "pos_doc_id": self.pos_doc_id,
            "neg_doc_id": self.neg_doc_id,
            "segments_pos": self.segments_pos.to_dict(),
            "segments_neg": self.segments_neg.to_dict(),
            "teacher_pos": self.teacher_pos,
            "teacher_neg": self.teacher_neg,
        }


@dataclass(frozen=True)
class Phase2Record:
    qid: str
    qt: Term
    dt_pos: Term
    dt_neg: Term
    doc_pos_id: str
    doc_neg_id: str
    score_pos: float
    score_neg: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "qid": self.qid,
            "qt": self.qt,
            "dt_pos": self.dt_pos,
            "dt_neg": self.dt_neg,
            "doc_pos_id": self.doc_pos_id,
            "doc_neg_id": self.doc_neg_id,
            "score_pos": self.score_pos,
            "score_neg": self.score_neg,
        }

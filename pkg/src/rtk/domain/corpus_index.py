from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import NamedTuple

from .analyzer_config import AnalyzerConfig, Term
from .errors import UnknownDocumentError

_NO_POSTINGS: tuple[Posting, ...] = ()
_NO_TERMS: Mapping[Term, int] = MappingProxyType({})


class Posting(NamedTuple):
    doc_id: str
    tf: int


@dataclass(frozen=True)
class CorpusIndex:
    """Inverted index with the collection statistics BM25/QL scoring needs.

    Immutable once built. `doc_terms` is the forward view (doc -> term counts),
    derived from the postings and never persisted.
    """

    postings: Mapping[Term, tuple[Posting, ...]]
    doc_len: Mapping[str, int]
    analyzer: AnalyzerConfig
    doc_terms: Mapping[str, Mapping[Term, int]] = field(repr=False)
    df: Mapping[Term, int] = field(repr=False)
    cf: Mapping[Term, int] = field(repr=False)
    n_docs: int = 0
    total_tokens: int = 0
    avgdl: float = 0.0

    @classmethod
    def from_postings(
        cls,
        postings: Mapping[Term, list[Posting] | tuple[Posting, ...]],
        doc_len: Mapping[str, int],
        analyzer: AnalyzerConfig,
    ) -> CorpusIndex:
        """Derive df, cf, totals and the forward view from postings and document lengths."""
        frozen = {term: tuple(plist) for term, plist in sorted(postings.items())}
        forward: dict[str, dict[Term, int]] = {doc_id: {} for doc_id in doc_len}
        for term, plist in frozen.items():
            for doc_id, tf in plist:
                forward[doc_id][term] = tf
        n_docs = len(doc_len)
        total = sum(doc_len.values())
        return cls(
            postings=MappingProxyType(frozen),
            doc_len=MappingProxyType(dict(doc_len)),
            analyzer=analyzer,
            doc_terms=MappingProxyType({d: MappingProxyType(t) for d, t in forward.items()}),
            df=MappingProxyType({term: len(plist) for term, plist in frozen.items()}),
            cf=MappingProxyType({term: sum(p.tf for p in plist) for term, plist in frozen.items()}),
            n_docs=n_docs,
            total_tokens=total,
            avgdl=total / n_docs if n_docs else 0.0,
        )

    @property
    def doc_ids(self) -> list[str]:
        return list(self.doc_len)

    @property
    def vocabulary(self) -> list[Term]:
        return list(self.postings)

    def has_doc(self, doc_id: str) -> bool:
        return doc_id in self.doc_len

    def require_doc(self, doc_id: str) -> None:
        if doc_id not in self.doc_len:
            raise UnknownDocumentError(doc_id)

    def postings_for(self, term: Term) -> tuple[Posting, ...]:
        return self.postings.get(term, _NO_POSTINGS)

    def terms_of(self, doc_id: str) -> Mapping[Term, int]:
        self.require_doc(doc_id)
        return self.doc_terms.get(doc_id, _NO_TERMS)

    def tf(self, term: Term, doc_id: str) -> int:
        return self.terms_of(doc_id).get(term, 0)

    def collection_probability(self, term: Term) -> float:
        """p(term | C) = cf / total_tokens."""
        if self.total_tokens == 0:
            return 0.0
        return self.cf.get(term, 0) / self.total_tokens

from __future__ import annotations

import math
from collections import Counter, defaultdict
from collections.abc import Iterable

from rtk.analysis.analyzer import analyzer_for
from rtk.domain.analyzer_config import AnalyzerConfig, Document, Term
from rtk.domain.corpus_index import CorpusIndex, Posting
from rtk.domain.errors import RtkError

from .retrieval_resources import str_resources


def build_index(corpus: Iterable[Document], cfg: AnalyzerConfig) -> CorpusIndex:
    """Analyze and invert a corpus. Posting lists follow corpus order."""
    analyzer = analyzer_for(cfg)
    postings: dict[Term, list[Posting]] = defaultdict(list)
    doc_len: dict[str, int] = {}
    for doc in corpus:
        if doc.doc_id in doc_len:
            raise RtkError(str_resources.err_duplicate_doc.format(doc_id=doc.doc_id))
        terms = analyzer.analyze(doc.text)
        doc_len[doc.doc_id] = len(terms)
        for term, tf in Counter(terms).items():
            postings[term].append(Posting(doc.doc_id, tf))
    if not doc_len:
        raise RtkError(str_resources.err_empty_corpus)
    return CorpusIndex.from_postings(postings, doc_len, cfg)


def idf(index: CorpusIndex, term: Term) -> float:
    """ln(1 + (N - df + 0.5) / (df + 0.5)); positive for every df <= N."""
    df = index.df.get(term, 0)
    return math.log1p((index.n_docs - df + 0.5) / (df + 0.5))


def docs_containing(index: CorpusIndex, terms: Iterable[Term]) -> set[str]:
    return {posting.doc_id for term in terms for posting in index.postings_for(term)}

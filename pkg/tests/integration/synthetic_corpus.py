"""A 200-document corpus with injected synonym structure.

Every topic has one relevant document that shares a topic word with the
query and carries the synonym of the other query word, plus shorter
distractors that only share the topic word. Plain BM25 prefers the short
distractors; a thesaurus that maps each query word to its synonym recovers
the relevant document.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from rtk.domain.runs import RankedDoc, ScoredRun, sort_ranking
from rtk.infrastructure.file_util import write_jsonl, write_tsv
from rtk.infrastructure.trec_io import write_run

N_DOCS = 200
N_TOPICS = 20
DISTRACTORS_PER_TOPIC = 3
SYNONYM_SCORE = 0.9

_FILLERS = [f"filler{i}" for i in range(40)]


@dataclass(frozen=True)
class SyntheticCorpus:
    corpus: Path
    queries: Path
    qrels: Path
    thesaurus: Path
    docs: dict[str, str]
    query_texts: dict[str, str]
    synonyms: dict[str, str]


def build_synthetic_corpus(directory: Path, seed: int = 0) -> SyntheticCorpus:
    rng = np.random.default_rng(seed)

    def fillers(n: int) -> list[str]:
        return [_FILLERS[int(i)] for i in rng.integers(0, len(_FILLERS), n)]

    docs: dict[str, str] = {}
    queries: dict[str, str] = {}
    synonyms: dict[str, str] = {}
    qrels: list[str] = []
    for t in range(N_TOPICS):
        relevant = f"rel{t:02d}"
        docs[relevant] = " ".join([f"topic{t}", f"syn{t}", *fillers(6)])
        for k in range(DISTRACTORS_PER_TOPIC):
            docs[f"dis{t:02d}{k}"] = " ".join([f"topic{t}", *fillers(2)])
        qid = f"q{t:02d}"
        queries[qid] = f"quest{t} topic{t}"
        synonyms[f"quest{t}"] = f"syn{t}"
        qrels.append(f"{qid} 0 {relevant} 1\n")
    while len(docs) < N_DOCS:
        docs[f"bg{len(docs):03d}"] = " ".join(fillers(5))

    corpus = directory / "synthetic.jsonl"
    write_jsonl(str(corpus), ({"doc_id": doc_id, "text": text} for doc_id, text in docs.items()))
    queries_path = directory / "synthetic_queries.tsv"
    write_tsv(str(queries_path), queries.items())
    qrels_path = directory / "synthetic_qrels.txt"
    qrels_path.write_text("".join(qrels), encoding="utf-8")
    thesaurus = directory / "synthetic_thesaurus.tsv"
    write_tsv(str(thesaurus), [(qt, dt, SYNONYM_SCORE) for qt, dt in synonyms.items()])

    return SyntheticCorpus(corpus, queries_path, qrels_path, thesaurus, docs, queries, synonyms)


def teacher_score(synthetic: SyntheticCorpus, query: str, text: str) -> float:
    """Exact matches count 1, synonyms from the table count SYNONYM_SCORE."""
    counts = Counter(text.split())
    score = 0.0
    for word in query.split():
        score += counts[word]
        synonym = synthetic.synonyms.get(word)
        if synonym is not None:
            score += SYNONYM_SCORE * counts[synonym]
    return score


def write_teacher_run(synthetic: SyntheticCorpus, path: Path) -> None:
    """Score every document with teacher_score."""
    run: ScoredRun = {}
    for qid, query in synthetic.query_texts.items():
        ranking = [RankedDoc(doc_id, teacher_score(synthetic, query, text)) for doc_id, text in synthetic.docs.items()]
        run[qid] = sort_ranking(ranking)
    write_run(run, str(path), "teacher")

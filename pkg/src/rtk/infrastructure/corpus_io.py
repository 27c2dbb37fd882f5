"""Readers for corpora, query files and training triplets."""

from __future__ import annotations

from rtk.domain.analyzer_config import Document
from rtk.domain.runs import Query, Triplet
from rtk.domain.status_level import Status, error

from .file_util import read_jsonl, read_tsv
from .infrastructure_resources import str_resources

CORPUS_FORMATS = ("jsonl", "tsv")


def read_corpus(path: str, fmt: str = "jsonl") -> tuple[list[Document] | None, list[Status]]:
    """Read documents in input order. Duplicate ids are left for build_index to reject."""
    if fmt == "jsonl":
        rows, errors = read_jsonl(path, ("doc_id", "text"))
        if rows is None:
            return None, errors
        entries = [(r.line, str(r.value["doc_id"]), str(r.value["text"])) for r in rows]
    elif fmt == "tsv":
        tsv_rows, errors = read_tsv(path, (2,))
        if tsv_rows is None:
            return None, errors
        entries = [(r.line, r.fields[0], r.fields[1]) for r in tsv_rows]
    else:
        return None, [error(str_resources.err_unknown_format.format(fmt=fmt))]

    documents: list[Document] = []
    for line, doc_id, text in entries:
        if not doc_id.strip():
            errors.append(error(str_resources.err_empty_field.format(path=path, line=line, field="doc_id")))
            continue
        documents.append(Document(doc_id, text))
    return documents, errors


def read_queries(path: str) -> tuple[list[Query] | None, list[Status]]:
    """qid<TAB>query per line."""
    rows, errors = read_tsv(path, (2,))
    if rows is None:
        return None, errors
    queries: list[Query] = []
    seen: set[str] = set()
    for line, (qid, text) in rows:
        if qid in seen:
            errors.append(error(str_resources.err_duplicate_qid.format(path=path, line=line, qid=qid)))
            continue
        seen.add(qid)
        queries.append(Query(qid, text))
    return queries, errors


def read_triplets(path: str) -> tuple[list[Triplet] | None, list[Status]]:
    """query<TAB>pos<TAB>neg, or qid<TAB>query<TAB>pos<TAB>neg.

    Three-column rows get their line number as qid.
    """
    rows, errors = read_tsv(path, (3, 4))
    if rows is None:
        return None, errors
    triplets: list[Triplet] = []
    for line, fields in rows:
        if len(fields) == 3:
            triplets.append(Triplet(str(line), *fields))
        else:
            triplets.append(Triplet(*fields))
    return triplets, errors


def read_text_scores(path: str) -> tuple[dict[tuple[str, str], float] | None, list[Status]]:
    """query<TAB>doc text<TAB>score rows, e.g. neural scores for probe inputs."""
    rows, errors = read_tsv(path, (3,))
    if rows is None:
        return None, errors
    scores: dict[tuple[str, str], float] = {}
    for line, (query, doc, raw_score) in rows:
        try:
            score = float(raw_score)
        except ValueError:
            errors.append(error(str_resources.err_trec_number.format(
                path=path, line=line, value=raw_score, kind="score"
            )))
            continue
        if (query, doc) in scores:
            errors.append(error(str_resources.err_trec_duplicate.format(path=path, line=line, qid=query, doc_id=doc)))
            continue
        scores[(query, doc)] = score
    return scores, errors

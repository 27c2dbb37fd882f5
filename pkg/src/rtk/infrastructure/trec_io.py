"""TREC run and qrels codecs.

run:   qid Q0 docid rank score tag
qrels: qid iter docid grade
"""

from __future__ import annotations

import math
from pathlib import Path

from rtk.domain.runs import Qrels, RankedDoc, ScoredRun, sort_ranking
from rtk.domain.status_level import Status, error

from .file_util import content_lines, read_text
from .infrastructure_resources import str_resources

DEFAULT_RUN_TAG = "rtk"


def read_run(path: str) -> tuple[ScoredRun | None, list[Status]]:
    """Parse a run file; each query's list is re-sorted by descending score, then doc_id."""
    text, errors = read_text(path)
    if text is None:
        return None, errors
    run: dict[str, dict[str, float]] = {}
    for number, line in content_lines(text):
        fields = line.split()
        if len(fields) != 6:
            errors.append(error(str_resources.err_trec_run_row.format(path=path, line=number)))
            continue
        qid, _, doc_id, _, raw_score, _ = fields
        try:
            score = float(raw_score)
        except ValueError:
            score = math.nan
        if not math.isfinite(score):
            errors.append(error(str_resources.err_trec_number.format(
                path=path, line=number, value=raw_score, kind="score"
            )))
            continue
        docs = run.setdefault(qid, {})
        if doc_id in docs:
            errors.append(error(str_resources.err_trec_duplicate.format(
                path=path, line=number, qid=qid, doc_id=doc_id
            )))
            continue
        docs[doc_id] = score
    return {qid: sort_ranking([RankedDoc(d, s) for d, s in docs.items()]) for qid, docs in run.items()}, errors


def format_run(run: ScoredRun, tag: str = DEFAULT_RUN_TAG) -> str:
    lines = [
        f"{qid} Q0 {doc.doc_id} {rank} {doc.score!r} {tag}"
        for qid, docs in run.items()
        for rank, doc in enumerate(docs, start=1)
    ]
    return "".join(line + "\n" for line in lines)


def write_run(run: ScoredRun, path: str, tag: str = DEFAULT_RUN_TAG) -> int:
    Path(path).write_text(format_run(run, tag), encoding="utf-8", newline="\n")
    return sum(len(docs) for docs in run.values())


def read_qrels(path: str) -> tuple[Qrels | None, list[Status]]:
    text, errors = read_text(path)
    if text is None:
        return None, errors
    qrels: Qrels = {}
    for number, line in content_lines(text):
        fields = line.split()
        if len(fields) != 4:
            errors.append(error(str_resources.err_trec_qrels_row.format(path=path, line=number)))
            continue
        qid, _, doc_id, raw_grade = fields
        try:
            grade = int(raw_grade)
        except ValueError:
            errors.append(error(str_resources.err_trec_number.format(
                path=path, line=number, value=raw_grade, kind="grade"
            )))
            continue
        if grade < 0:
            errors.append(error(str_resources.err_trec_grade.format(path=path, line=number, grade=grade)))
            continue
        judged = qrels.setdefault(qid, {})
        if doc_id in judged:
            errors.append(error(str_resources.err_trec_duplicate.format(
                path=path, line=number, qid=qid, doc_id=doc_id
            )))
            continue
        judged[doc_id] = grade
    return qrels, errors

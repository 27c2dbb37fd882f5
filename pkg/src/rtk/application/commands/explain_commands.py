"""align extract, traindata phase1 and traindata phase2."""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path
from typing import Any

import numpy as np

from rtk.domain.attention import AttentionTensor
from rtk.domain.runs import Triplet
from rtk.domain.status_level import Status, error
from rtk.explain.alignment import extract_all
from rtk.explain.training_data import Phase1Input, emit_phase1, emit_phase2, full_doc_terms
from rtk.infrastructure.attention_io import load_attention
from rtk.infrastructure.corpus_io import read_corpus, read_triplets
from rtk.infrastructure.file_util import JsonRow, read_jsonl, write_jsonl

from ..application_resources import str_resources
from ..cli import UsageError
from ..command_context import CommandContext
from .thesaurus_commands import pair_scorer

WordPair = tuple[list[str], list[str]]

_PHASE1_FIELDS = ("qid", "pos_doc_id", "neg_doc_id", "attn_pos", "attn_neg", "teacher_pos", "teacher_neg")


def _is_words(value: Any) -> bool:
    return isinstance(value, list) and all(isinstance(v, str) for v in value)


def _read_words(ctx: CommandContext, path: str, expected: int) -> list[WordPair]:
    rows = ctx.loaded(read_jsonl(path, ("query_words", "doc_words")))
    errors = [
        error(str_resources.err_words_row.format(path=path, line=row.line))
        for row in rows
        if not (_is_words(row.value["query_words"]) and _is_words(row.value["doc_words"]))
    ]
    if len(rows) != expected and not errors:
        errors.append(error(str_resources.err_words_count.format(got=len(rows), expected=expected)))
    ctx.report(errors)
    return [(row.value["query_words"], row.value["doc_words"]) for row in rows]


def _load_tensors(ctx: CommandContext, paths: Sequence[str]) -> list[AttentionTensor]:
    with ctx.stage("loading attention", len(paths)) as counter:
        tensors = [ctx.loaded(load_attention(path)) for path in paths]
        counter.count = len(tensors)
    return tensors


def align_extract(ctx: CommandContext) -> None:
    opts = ctx.options
    tensors = _load_tensors(ctx, opts.attn)
    words = _read_words(ctx, opts.words, len(tensors)) if opts.words else None

    with ctx.stage("sampling segments", len(tensors)) as counter:
        segments = extract_all(tensors, ctx.config.seed, words, ctx.config.segment_reduction, ctx.config.threads)
        counter.count = len(segments)

    records = ({"source": path, **pair.to_dict()} for path, pair in zip(opts.attn, segments, strict=True))
    ctx.written(opts.out, write_jsonl(opts.out, records))


# --- phase 1 ---


def _phase1_errors(path: str, row: JsonRow) -> list[Status]:
    value = row.value
    checks = [(f, "a string", isinstance(value[f], str)) for f in _PHASE1_FIELDS[:5]]
    checks += [
        (f, "a number", isinstance(value[f], int | float) and not isinstance(value[f], bool))
        for f in ("teacher_pos", "teacher_neg")
    ]
    checks += [
        (f, "a list of strings", _is_words(value[f]))
        for f in ("query_words", "pos_words", "neg_words")
        if f in value
    ]
    return [
        error(str_resources.err_phase1_field.format(path=path, line=row.line, field=name, expected=expected))
        for name, expected, ok in checks
        if not ok
    ]


def _read_phase1_items(ctx: CommandContext, path: str) -> list[Phase1Input]:
    """Attention paths in the items file are relative to that file's directory."""
    rows = ctx.loaded(read_jsonl(path, _PHASE1_FIELDS))
    ctx.report([e for row in rows for e in _phase1_errors(path, row)])

    base = Path(path).parent
    items: list[Phase1Input] = []
    with ctx.stage("loading attention", 2 * len(rows)) as counter:
        for row in rows:
            value = row.value
            items.append(
                Phase1Input(
                    qid=value["qid"],
                    pos_doc_id=value["pos_doc_id"],
                    neg_doc_id=value["neg_doc_id"],
                    tensor_pos=ctx.loaded(load_attention(str(base / value["attn_pos"]))),
                    tensor_neg=ctx.loaded(load_attention(str(base / value["attn_neg"]))),
                    teacher_pos=float(value["teacher_pos"]),
                    teacher_neg=float(value["teacher_neg"]),
                    q_words=value.get("query_words"),
                    pos_words=value.get("pos_words"),
                    neg_words=value.get("neg_words"),
                )
            )
            counter.count += 2
    return items


def traindata_phase1(ctx: CommandContext) -> None:
    opts = ctx.options
    items = _read_phase1_items(ctx, opts.items)
    with ctx.stage("building phase-1 records", len(items)) as counter:
        records = emit_phase1(items, ctx.config.seed, ctx.config.segment_reduction, ctx.config.threads)
        counter.count = len(records)
    ctx.written(opts.out, write_jsonl(opts.out, (r.to_dict() for r in records)))


# --- phase 2 ---


def traindata_phase2(ctx: CommandContext) -> None:
    opts = ctx.options
    triplets = ctx.loaded(read_triplets(opts.triplets))
    index = ctx.load_index()
    scorer = pair_scorer(ctx, ctx.config.thesaurus_path)
    if scorer is None:
        raise UsageError(str_resources.err_cli_required.format(flag="--thesaurus or --pairs"))

    skipped: list[Triplet] = []

    def on_skip(triplet: Triplet, reason: str) -> None:
        skipped.append(triplet)
        ctx.info(f"{triplet.qid}: {reason}")

    doc_terms = None
    if opts.corpus:
        with ctx.stage("reading corpus") as counter:
            doc_terms = full_doc_terms(ctx.loaded(read_corpus(opts.corpus, opts.format)), index.analyzer)
            counter.count = len(doc_terms)

    rng = np.random.default_rng(ctx.config.seed)
    with ctx.stage("building phase-2 records", len(triplets)) as counter:
        records = [r.to_dict() for r in emit_phase2(index, scorer, triplets, rng, on_skip, doc_terms)]
        counter.count = len(records)
    if skipped:
        ctx.warn(str_resources.warn_triplets_skipped.format(count=len(skipped)))
    ctx.written(opts.out, write_jsonl(opts.out, records))

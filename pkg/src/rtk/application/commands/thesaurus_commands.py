"""thesaurus filter, candidates, top and ltog."""

from __future__ import annotations

from collections.abc import Sequence
from typing import Any

from rtk.domain.analyzer_config import Term
from rtk.domain.status_level import Status, error
from rtk.domain.thesaurus import CandidateSpec
from rtk.explain.ltog import Alignment, align_local_terms, count_occurrences, ltog_thesaurus
from rtk.explain.training_data import ExternalPairScorer, PairScorer, ThesaurusPairScorer
from rtk.infrastructure.file_util import JsonRow, read_jsonl, write_tsv
from rtk.infrastructure.thesaurus_io import read_scored_pairs, save_thesaurus
from rtk.retrieval.thesaurus import candidate_pairs, filter_scored_pairs, top_entries

from ..application_resources import str_resources
from ..cli import UsageError
from ..command_context import CommandContext


def thesaurus_filter(ctx: CommandContext) -> None:
    opts = ctx.options
    spec = CandidateSpec(min_score=opts.min_score)
    with ctx.stage("filtering scored pairs") as counter:
        scored = ctx.loaded(read_scored_pairs(opts.input))
        thesaurus = filter_scored_pairs(scored, spec)
        counter.count = len(thesaurus)
    ctx.written(opts.out, save_thesaurus(thesaurus, opts.out, ctx.header_lines()))


def thesaurus_candidates(ctx: CommandContext) -> None:
    opts = ctx.options
    index = ctx.load_index()
    spec = CandidateSpec(n_query_terms=opts.nq, n_doc_terms=opts.nd)
    count = write_tsv(opts.out, candidate_pairs(index, spec), ctx.header_lines())
    ctx.written(opts.out, count)


def thesaurus_top(ctx: CommandContext) -> None:
    opts = ctx.options
    index = ctx.load_index()
    path = ctx.require("--in", opts.input or ctx.config.thesaurus_path)
    thesaurus = ctx.load_thesaurus(path)
    rows = [(w.entry.qt, w.entry.dt, w.entry.score, w.weight) for w in top_entries(thesaurus, index, opts.k)]
    ctx.write_report(rows, opts.out)


def pair_scorer(ctx: CommandContext, default_thesaurus: str | None = None) -> PairScorer | None:
    """--pairs or --thesaurus (else default_thesaurus) as a pair scorer; None when neither is given."""
    pairs = ctx.options.pairs
    thesaurus_path = ctx.options.thesaurus or (None if pairs else default_thesaurus)
    if pairs and thesaurus_path:
        raise UsageError(str_resources.err_cli_pair_source)
    if pairs:
        return ExternalPairScorer(ctx.loaded(read_scored_pairs(pairs)))
    if thesaurus_path:
        return ThesaurusPairScorer(ctx.load_thesaurus(thesaurus_path))
    return None


def _string_list(value: Any) -> list[str] | None:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        return None
    return value


def _row_alignments(
    path: str, row: JsonRow, scorer: PairScorer | None, attribution: str
) -> tuple[list[Term] | None, list[Alignment], list[Status]]:
    """query terms and alignments of one row: explicit, or derived from explanation terms."""
    q_terms = _string_list(row.value.get("query_terms"))
    if q_terms is None:
        return None, [], [error(str_resources.err_ltog_row.format(path=path, line=row.line))]

    if "alignments" in row.value:
        alignments: list[Alignment] = []
        for item in row.value["alignments"]:
            valid = (
                isinstance(item, list)
                and len(item) in (2, 3)
                and all(isinstance(t, str) for t in item[:2])
                and (len(item) == 2 or (isinstance(item[2], int | float) and not isinstance(item[2], bool)))
            )
            if not valid:
                return None, [], [error(str_resources.err_ltog_alignment.format(path=path, line=row.line))]
            alignments.append(Alignment(item[0], item[1], float(item[2]) if len(item) == 3 else 1.0))
        return q_terms, alignments, []

    explanation = _string_list(row.value.get("explanation_terms"))
    if explanation is None:
        return None, [], [error(str_resources.err_ltog_row.format(path=path, line=row.line))]
    if scorer is None:
        return None, [], [error(str_resources.err_ltog_needs_pairs.format(path=path, line=row.line))]
    return q_terms, align_local_terms(q_terms, explanation, scorer, attribution), []


def thesaurus_ltog(ctx: CommandContext) -> None:
    opts = ctx.options
    rows = ctx.loaded(read_jsonl(opts.alignments, ("query_terms",)))
    scorer = pair_scorer(ctx)

    queries: list[Sequence[Term]] = []
    alignments: list[Alignment] = []
    errors: list[Status] = []
    with ctx.stage("collecting alignments", len(rows)) as counter:
        for row in rows:
            q_terms, row_alignments, row_errors = _row_alignments(opts.alignments, row, scorer, opts.attribution)
            errors.extend(row_errors)
            if q_terms is not None:
                queries.append(q_terms)
                alignments.extend(row_alignments)
        counter.count = len(alignments)
    ctx.report(errors)

    thesaurus, statuses = ltog_thesaurus(alignments, count_occurrences(queries), opts.min_count)
    ctx.report(statuses)
    ctx.written(opts.out, save_thesaurus(thesaurus, opts.out, ctx.header_lines()))

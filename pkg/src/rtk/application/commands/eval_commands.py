"""eval effectiveness and eval fidelity."""

from __future__ import annotations

from rtk.domain.runs import ScoredRun
from rtk.evaluation.fidelity import DEFAULT_TOPK, FIDELITY_METRICS, evaluate_fidelity, truncate_run
from rtk.evaluation.metrics import EFFECTIVENESS_METRICS, evaluate_effectiveness, parse_metric_name
from rtk.evaluation.significance import paired_t_test
from rtk.infrastructure.trec_io import read_qrels, read_run

from ..application_resources import str_resources
from ..command_context import CommandContext

DEFAULT_EFFECTIVENESS_METRICS = ("mrr", "ndcg")
DEFAULT_FIDELITY_METRIC = "pearson"
MIN_T_TEST_QUERIES = 2

Row = tuple[object, ...]


def _effectiveness_label(name: str, cutoff: int) -> str:
    metric, k = parse_metric_name(name, EFFECTIVENESS_METRICS, cutoff)
    return f"{metric}@{k}"


def _fidelity_label(name: str) -> str:
    metric, k = parse_metric_name(name, FIDELITY_METRICS)
    return f"topk@{k or DEFAULT_TOPK}" if metric == "topk" else metric


def _load_run(ctx: CommandContext, path: str) -> ScoredRun:
    with ctx.stage(f"reading {path}") as counter:
        run = ctx.loaded(read_run(path))
        counter.count = len(run)
    return run


def eval_effectiveness(ctx: CommandContext) -> None:
    opts = ctx.options
    run = _load_run(ctx, opts.run)
    qrels = ctx.loaded(read_qrels(opts.qrels))
    other = _load_run(ctx, opts.compare) if opts.compare else None
    cutoff = ctx.config.mrr_cutoff

    rows: list[Row] = []
    for name in opts.metric or DEFAULT_EFFECTIVENESS_METRICS:
        label = _effectiveness_label(name, cutoff)
        result = evaluate_effectiveness(name, run, qrels, cutoff)
        if result.skipped:
            ctx.warn(str_resources.warn_unjudged_queries.format(count=len(result.skipped)))
        if result.flagged:
            ctx.warn(str_resources.warn_flagged_queries.format(count=len(result.flagged)))

        if other is None:
            rows.extend((label, qid, value) for qid, value in result.per_query.items())
            rows.append((label, "all", result.value))
            continue

        compared = evaluate_effectiveness(name, other, qrels, cutoff)
        shared = [qid for qid in result.per_query if qid in compared.per_query]
        dropped = len(result.per_query) - len(shared)
        if dropped:
            ctx.warn(str_resources.warn_compare_missing.format(count=dropped))
        rows.extend((label, qid, result.per_query[qid], compared.per_query[qid]) for qid in shared)
        rows.append((label, "all", result.value, compared.value))
        if len(shared) < MIN_T_TEST_QUERIES:
            ctx.warn(str_resources.warn_t_test_skipped.format(metric=label, count=len(shared)))
            continue
        test = paired_t_test([result.per_query[q] for q in shared], [compared.per_query[q] for q in shared])
        rows.append((label, "t_test", test.mean_delta, test.t, test.df, test.p_value))

    ctx.write_report(rows, opts.out)


def eval_fidelity(ctx: CommandContext) -> None:
    opts = ctx.options
    run_e = _load_run(ctx, opts.run_e)
    run_b = _load_run(ctx, opts.run_b)
    reference = _load_run(ctx, opts.reference) if opts.reference else run_b

    depth = ctx.config.fidelity_depth
    run_e = truncate_run(run_e, depth, reference)
    run_b = truncate_run(run_b, depth, reference)
    covered = len(set(run_e) & set(run_b))
    ctx.info(str_resources.info_coverage.format(covered=covered, total=len(set(run_e) | set(run_b))))

    rows: list[Row] = []
    for name in opts.metric or (DEFAULT_FIDELITY_METRIC,):
        label = _fidelity_label(name)
        result = evaluate_fidelity(name, run_e, run_b)
        if result.partial:
            ctx.warn(str_resources.warn_partial_queries.format(count=len(result.partial)))
        if result.skipped:
            ctx.warn(
                str_resources.warn_skipped_queries.format(
                    count=len(result.skipped), metric=label, qids=", ".join(result.skipped)
                )
            )
        rows.extend((label, qid, value) for qid, value in result.per_query.items())
        rows.append((label, "all", result.value))

    ctx.write_report(rows, opts.out)

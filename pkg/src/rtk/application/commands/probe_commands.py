"""probe grid, probe postfix and probe years."""

from __future__ import annotations

from collections import defaultdict

from rtk.infrastructure.corpus_io import read_text_scores
from rtk.probes.charts import write_bar_chart, write_line_chart
from rtk.probes.probe_inputs import read_grid_rows, read_postfix_rows, read_reference, read_sweeps, read_values
from rtk.probes.probes import (
    DEFAULT_CHARS,
    grid_bias_correlation,
    run_postfix_probe,
    run_replacement_grid,
    run_year_sweep,
)
from rtk.retrieval.scoring import ExternalTextScorer, LexicalScorer, TextScorer

from ..application_resources import str_resources
from ..cli import UsageError
from ..command_context import CommandContext
from .retrieval_commands import build_lexical_scorer

Row = tuple[object, ...]

# printed for statistics that are undefined
_UNDEFINED = "-"


def probe_scorer(ctx: CommandContext) -> TextScorer:
    opts = ctx.options
    if (opts.scorer is None) == (opts.scores is None):
        raise UsageError(str_resources.err_cli_probe_scorer)
    if opts.scores:
        return ExternalTextScorer(ctx.loaded(read_text_scores(opts.scores)))
    return build_lexical_scorer(ctx, opts.scorer, ctx.load_index())


def probe_grid(ctx: CommandContext) -> None:
    opts = ctx.options
    rows = ctx.loaded(read_grid_rows(opts.input))
    values = ctx.loaded(read_values(opts.values))
    reference = ctx.loaded(read_reference(opts.reference)) if opts.reference else None
    scorer = probe_scorer(ctx)

    with ctx.stage("scoring replacement grid", len(rows) * len(values)) as counter:
        grid = run_replacement_grid(scorer, rows, values, ctx.config.threads)
        counter.count = grid.scores.size

    report: list[Row] = [
        (i, value, float(grid.scores[i, j]), int(grid.original_value_index[i] == j))
        for i in range(len(grid.rows))
        for j, value in enumerate(grid.columns)
    ]
    means = grid.column_means
    report.extend(("mean", value, float(means[j])) for j, value in enumerate(grid.columns))
    if reference is not None:
        report.append(("bias_correlation", grid_bias_correlation(grid, reference)))
    ctx.write_report(report, opts.out)

    if opts.svg:
        write_bar_chart(opts.svg, grid.columns, means.tolist(), "mean score per slot value", "score")
        ctx.written(opts.svg, len(grid.columns))


def probe_postfix(ctx: CommandContext) -> None:
    opts = ctx.options
    rows = ctx.loaded(read_postfix_rows(opts.input))
    chars = list(opts.chars) if opts.chars else list(DEFAULT_CHARS)
    scorer = probe_scorer(ctx)
    analyzer = scorer.analyzer if isinstance(scorer, LexicalScorer) else None

    with ctx.stage("scoring postfix variants", len(rows) * len(chars)) as counter:
        report = run_postfix_probe(scorer, rows, chars, opts.alpha, analyzer)
        counter.count = len(rows) * len(chars)

    significant = set(report.significant())
    ctx.write_report(
        [
            (
                s.char,
                s.mean_delta,
                s.std,
                s.n,
                _UNDEFINED if s.t is None else s.t,
                _UNDEFINED if s.p_value is None else s.p_value,
                int(s.char in significant),
            )
            for s in report.chars
        ],
        opts.out,
    )

    if opts.svg:
        write_bar_chart(
            opts.svg, [s.char for s in report.chars], [s.mean_delta for s in report.chars], "postfix delta", "delta"
        )
        ctx.written(opts.svg, len(report.chars))


def probe_years(ctx: CommandContext) -> None:
    opts = ctx.options
    sweeps = ctx.loaded(read_sweeps(opts.input))
    scorer = probe_scorer(ctx)

    report: list[Row] = []
    by_year: dict[int, list[float]] = defaultdict(list)
    with ctx.stage("sweeping years", len(sweeps)) as counter:
        for i, sweep in enumerate(sweeps):
            for year, score in run_year_sweep(scorer, sweep.query, sweep.template, sweep.years):
                report.append((i, year, score))
                by_year[year].append(score)
                counter.count += 1
    ctx.write_report(report, opts.out)

    if opts.svg:
        years = sorted(by_year)
        means = [sum(by_year[y]) / len(by_year[y]) for y in years]
        write_line_chart(opts.svg, years, means, "score by year", "year", "score")
        ctx.written(opts.svg, len(years))

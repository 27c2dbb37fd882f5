"""index build and search."""

from __future__ import annotations

from rtk.domain.corpus_index import CorpusIndex
from rtk.domain.thesaurus import Thesaurus
from rtk.infrastructure.corpus_io import read_corpus, read_queries
from rtk.infrastructure.index_store import save_index
from rtk.infrastructure.trec_io import format_run, write_run
from rtk.retrieval.index import build_index
from rtk.retrieval.ranking import rank_all
from rtk.retrieval.scoring import LexicalScorer, Scorer, external_scorer, lexical_scorer

from ..application_resources import str_resources
from ..cli import UsageError
from ..command_context import STDOUT, CommandContext
from ..output_util import present_result


def index_build(ctx: CommandContext) -> None:
    opts = ctx.options
    with ctx.stage("reading corpus") as counter:
        documents = ctx.loaded(read_corpus(opts.corpus, opts.format))
        counter.count = len(documents)

    with ctx.stage("indexing", len(documents)) as counter:
        index = build_index(documents, ctx.config.analyzer)
        counter.count = index.n_docs

    save_index(index, opts.out)
    ctx.written(opts.out, index.n_docs)


def build_lexical_scorer(ctx: CommandContext, name: str, index: CorpusIndex) -> LexicalScorer:
    thesaurus: Thesaurus | None = None
    if name in ("bm25t", "qlt"):
        path = ctx.thesaurus_path()
        if not path:
            raise UsageError(str_resources.err_cli_scorer_thesaurus.format(scorer=name))
        thesaurus = ctx.load_thesaurus(path)
    return lexical_scorer(name, index, ctx.config.bm25, ctx.config.ql, thesaurus)


def build_scorer(ctx: CommandContext, name: str, index: CorpusIndex) -> Scorer:
    """Scorer for --scorer, loading the thesaurus or external run it needs."""
    if name != "external":
        return build_lexical_scorer(ctx, name, index)
    run_path = getattr(ctx.options, "run", None)
    if not run_path:
        raise UsageError(str_resources.err_cli_scorer_run)
    return ctx.loaded(external_scorer(run_path))


def search(ctx: CommandContext) -> None:
    opts = ctx.options
    queries = ctx.loaded(read_queries(opts.queries))
    index = ctx.load_index()
    scorer = build_scorer(ctx, opts.scorer, index)

    with ctx.stage(f"ranking with {scorer.name}", len(queries)) as counter:
        run = rank_all(scorer, index, queries, opts.k, opts.full_scan, ctx.config.threads)
        counter.count = len(run)

    if opts.out:
        ctx.written(opts.out, write_run(run, opts.out, opts.tag))
        return
    present_result(format_run(run, opts.tag))
    ctx.written(STDOUT, sum(len(docs) for docs in run.values()))

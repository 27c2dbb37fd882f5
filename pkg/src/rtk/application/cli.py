from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from typing import Any, NoReturn

from rtk.domain.status_level import Status, StatusLevel
from rtk.domain.thesaurus import DEFAULT_MIN_SCORE, DEFAULT_N_DOC_TERMS, DEFAULT_N_QUERY_TERMS
from rtk.evaluation.fidelity import FIDELITY_METRICS
from rtk.explain.alignment import REDUCTIONS
from rtk.explain.ltog import ATTRIBUTIONS, DEFAULT_MIN_COUNT
from rtk.infrastructure.corpus_io import CORPUS_FORMATS
from rtk.infrastructure.trec_io import DEFAULT_RUN_TAG
from rtk.probes.probes import DEFAULT_ALPHA
from rtk.retrieval.scoring import SCORER_NAMES

from .application_resources import str_resources

DEFAULT_SEARCH_K = 1000
DEFAULT_TOP_K = 100

# scorers that can score raw probe text; external probe scores come from --scores
_LEXICAL_SCORERS = tuple(s for s in SCORER_NAMES if s != "external")


class UsageError(Exception):
    """Bad command line; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


@dataclass(frozen=True)
class CommandLine:
    # leaf command such as "search" or "thesaurus top"; None with --init
    command: str | None
    options: argparse.Namespace
    # flag values that override the config file, keyed by Configuration.merge names
    overrides: dict[str, Any] = field(default_factory=dict)
    config_file: str | None = None
    init_path: str | None = None


def parse_command_line_arguments(args: list[str] | None = None) -> tuple[CommandLine, list[Status]]:
    """Parse argv. argparse problems raise UsageError; flag range problems come back as statuses."""
    parser = build_parser()
    parsed = parser.parse_args(args)

    if parsed.init is not None:
        return CommandLine(command=None, options=parsed, init_path=parsed.init or "."), []

    if getattr(parsed, "command", None) is None:
        raise UsageError(parser.format_usage().strip())

    errors = _validate(parsed)
    if errors:
        return CommandLine(command=parsed.command, options=parsed), errors

    return CommandLine(
        command=parsed.command,
        options=parsed,
        overrides=_overrides(parsed),
        config_file=parsed.config,
    ), []


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rtk", description="relevance thesaurus toolkit")
    parser.add_argument("--init", nargs="?", const="", default=None, help="write rtk-config.yaml into a directory")
    groups = parser.add_subparsers(title="commands", metavar="COMMAND")

    common = _common_options()
    _add_index_commands(groups, common)
    _add_search_command(groups, common)
    _add_thesaurus_commands(groups, common)
    _add_explain_commands(groups, common)
    _add_eval_commands(groups, common)
    _add_probe_commands(groups, common)
    return parser


def _common_options() -> argparse.ArgumentParser:
    """Options every leaf command accepts. Defaults are None so only given flags override the config."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-c", "--config", default=None, help="configuration file path")
    common.add_argument(
        "-v", "--verbose", nargs="?", type=int, const=2, default=None, help="verbosity level 0-2 (-v alone sets 2)"
    )
    common.add_argument("--seed", type=int, default=None, help="seed for every stochastic step")
    common.add_argument("--threads", type=int, default=None, help="worker threads; output does not depend on it")
    common.add_argument("--k1", type=float, default=None, help="BM25 k1")
    common.add_argument("--b", type=float, default=None, help="BM25 b")
    common.add_argument("--mu", type=float, default=None, help="Dirichlet smoothing mu")
    common.add_argument(
        "--qlt-normalize", action="store_true", default=None, help="normalize QLT translation rows to sum to 1"
    )
    common.add_argument(
        "--no-stem", dest="stem", action="store_false", default=None, help="disable stemming in the analyzer"
    )
    return common


def _leaf(
    groups: argparse._SubParsersAction[Any], name: str, command: str, common: argparse.ArgumentParser, help_text: str
) -> argparse.ArgumentParser:
    leaf: argparse.ArgumentParser = groups.add_parser(name, parents=[common], help=help_text)
    leaf.set_defaults(command=command)
    return leaf


def _group(groups: argparse._SubParsersAction[Any], name: str, help_text: str) -> argparse._SubParsersAction[Any]:
    group = groups.add_parser(name, help=help_text)
    actions = group.add_subparsers(title="actions", metavar="ACTION")
    actions.required = True
    return actions


def _add_index_commands(groups: argparse._SubParsersAction[Any], common: argparse.ArgumentParser) -> None:
    actions = _group(groups, "index", "build inverted indexes")
    build = _leaf(actions, "build", "index build", common, "index a corpus")
    build.add_argument("--corpus", required=True, help="JSON-lines {doc_id, text} or TSV doc_id<TAB>text")
    build.add_argument("--out", required=True, help="index file to write")
    build.add_argument("--format", choices=CORPUS_FORMATS, default="jsonl", help="corpus format")


def _add_search_command(groups: argparse._SubParsersAction[Any], common: argparse.ArgumentParser) -> None:
    search = _leaf(groups, "search", "search", common, "rank documents for a query file")
    search.add_argument("--index", default=None, help="index file (default: index_path from the config)")
    search.add_argument("--scorer", choices=SCORER_NAMES, required=True)
    search.add_argument("--thesaurus", default=None, help="thesaurus TSV for bm25t and qlt")
    search.add_argument("--run", default=None, help="TREC run with precomputed scores for the external scorer")
    search.add_argument("--queries", required=True, help="qid<TAB>query file")
    search.add_argument("-k", type=int, default=DEFAULT_SEARCH_K, help="documents per query")
    search.add_argument("--full-scan", action="store_true", help="score every document, not only candidates")
    search.add_argument("--tag", default=DEFAULT_RUN_TAG, help="run tag written in the last column")
    search.add_argument("--out", default=None, help="run file (default: stdout)")


def _add_thesaurus_commands(groups: argparse._SubParsersAction[Any], common: argparse.ArgumentParser) -> None:
    actions = _group(groups, "thesaurus", "build and inspect relevance thesauri")

    filter_ = _leaf(actions, "filter", "thesaurus filter", common, "keep scored pairs above a threshold")
    filter_.add_argument("--in", dest="input", required=True, help="qt<TAB>dt<TAB>score file")
    filter_.add_argument("--min-score", type=float, default=DEFAULT_MIN_SCORE)
    filter_.add_argument("--out", required=True)

    candidates = _leaf(actions, "candidates", "thesaurus candidates", common, "write frequent term pairs to score")
    candidates.add_argument("--index", default=None)
    candidates.add_argument("--nq", type=int, default=DEFAULT_N_QUERY_TERMS, help="most frequent query terms")
    candidates.add_argument("--nd", type=int, default=DEFAULT_N_DOC_TERMS, help="most frequent document terms")
    candidates.add_argument("--out", required=True)

    top = _leaf(actions, "top", "thesaurus top", common, "report the most influential entries")
    top.add_argument("--index", default=None)
    top.add_argument("--in", dest="input", default=None, help="thesaurus TSV (default: thesaurus_path)")
    top.add_argument("-k", type=int, default=DEFAULT_TOP_K)
    top.add_argument("--out", default=None, help="report file (default: stdout)")

    ltog = _leaf(actions, "ltog", "thesaurus ltog", common, "aggregate local alignments into a thesaurus")
    ltog.add_argument("--alignments", required=True, help="JSON-lines alignment rows")
    ltog.add_argument("--pairs", default=None, help="scored pairs TSV used to align explanation terms")
    ltog.add_argument("--thesaurus", default=None, help="thesaurus used to align explanation terms")
    ltog.add_argument("--min-count", type=float, default=DEFAULT_MIN_COUNT, help="drop pairs aligned at most this often")
    ltog.add_argument("--attribution", choices=ATTRIBUTIONS, default="argmax")
    ltog.add_argument("--out", required=True)


def _add_explain_commands(groups: argparse._SubParsersAction[Any], common: argparse.ArgumentParser) -> None:
    align = _group(groups, "align", "attention alignment")
    extract = _leaf(align, "extract", "align extract", common, "sample segment pairs from attention tensors")
    extract.add_argument("--attn", nargs="+", required=True, help="attention tensor files")
    extract.add_argument("--words", default=None, help="JSON-lines {query_words, doc_words}, one row per tensor")
    extract.add_argument("--reduction", choices=REDUCTIONS, default=None)
    extract.add_argument("--out", required=True)

    traindata = _group(groups, "traindata", "training records for a partial relevance model")
    phase1 = _leaf(traindata, "phase1", "traindata phase1", common, "segment records with teacher scores")
    phase1.add_argument("--items", required=True, help="JSON-lines triplets with attention files and teacher scores")
    phase1.add_argument("--reduction", choices=REDUCTIONS, default=None)
    phase1.add_argument("--out", required=True)

    phase2 = _leaf(traindata, "phase2", "traindata phase2", common, "term-pair records for unmatched query terms")
    phase2.add_argument("--index", default=None)
    phase2.add_argument("--triplets", required=True, help="query<TAB>pos<TAB>neg or qid<TAB>query<TAB>pos<TAB>neg")
    phase2.add_argument("--thesaurus", default=None)
    phase2.add_argument("--pairs", default=None, help="scored pairs TSV from an external pair model")
    phase2.add_argument(
        "--corpus", default=None, help="corpus the index was built from; lets stopword query terms be chosen"
    )
    phase2.add_argument("--format", choices=CORPUS_FORMATS, default="jsonl", help="corpus format")
    phase2.add_argument("--out", required=True)


def _add_eval_commands(groups: argparse._SubParsersAction[Any], common: argparse.ArgumentParser) -> None:
    actions = _group(groups, "eval", "evaluate runs")

    effectiveness = _leaf(actions, "effectiveness", "eval effectiveness", common, "MRR and NDCG against qrels")
    effectiveness.add_argument("--run", required=True)
    effectiveness.add_argument("--qrels", required=True)
    effectiveness.add_argument("--metric", action="append", default=None, help="mrr@k or ndcg@k; repeatable")
    effectiveness.add_argument("--compare", default=None, help="second run for a paired t-test")
    effectiveness.add_argument("--out", default=None)

    fidelity = _leaf(actions, "fidelity", "eval fidelity", common, "agreement between an explanation and a target run")
    fidelity.add_argument("--run-e", required=True, help="explanation model run")
    fidelity.add_argument("--run-b", required=True, help="target model run")
    fidelity.add_argument(
        "--metric", action="append", default=None, help=f"one of {', '.join(FIDELITY_METRICS)} (topk@k); repeatable"
    )
    fidelity.add_argument("--depth", type=int, default=None, help="documents per query kept from the reference run")
    fidelity.add_argument("--reference", default=None, help="run that fixes the document set (default: --run-b)")
    fidelity.add_argument("--out", default=None)


def _add_probe_commands(groups: argparse._SubParsersAction[Any], common: argparse.ArgumentParser) -> None:
    probe_options = argparse.ArgumentParser(add_help=False)
    probe_options.add_argument("--scorer", choices=_LEXICAL_SCORERS, default=None)
    probe_options.add_argument("--index", default=None, help="index supplying collection statistics")
    probe_options.add_argument("--thesaurus", default=None)
    probe_options.add_argument("--scores", default=None, help="query<TAB>doc text<TAB>score file from another model")
    probe_options.add_argument("--in", dest="input", required=True, help="JSON-lines probe rows")
    probe_options.add_argument("--out", default=None, help="report file (default: stdout)")
    probe_options.add_argument("--svg", default=None, help="also draw the report as an SVG chart")

    actions = _group(groups, "probe", "bias probes")
    grid = actions.add_parser("grid", parents=[common, probe_options], help="slot replacement grid")
    grid.set_defaults(command="probe grid")
    grid.add_argument("--values", required=True, help="slot values, one per line")
    grid.add_argument("--reference", default=None, help="value<TAB>score file for the bias correlation")

    postfix = actions.add_parser("postfix", parents=[common, probe_options], help="appended-character probe")
    postfix.set_defaults(command="probe postfix")
    postfix.add_argument("--chars", default=None, help="characters to append (default a-z)")
    postfix.add_argument("--alpha", type=float, default=DEFAULT_ALPHA, help="family-wise significance level")

    years = actions.add_parser("years", parents=[common, probe_options], help="year sweep")
    years.set_defaults(command="probe years")


def _validate(parsed: argparse.Namespace) -> list[Status]:
    checks = [
        ("--verbose", parsed.verbose, lambda v: v in (0, 1, 2), "0, 1 or 2"),
        ("--threads", parsed.threads, lambda v: v >= 1, ">= 1"),
        ("--k1", parsed.k1, lambda v: v >= 0, ">= 0"),
        ("--b", parsed.b, lambda v: 0 <= v <= 1, "in [0, 1]"),
        ("--mu", parsed.mu, lambda v: v > 0, "> 0"),
        ("-k", getattr(parsed, "k", None), lambda v: v >= 1, ">= 1"),
        ("--depth", getattr(parsed, "depth", None), lambda v: v >= 1, ">= 1"),
        ("--min-score", getattr(parsed, "min_score", None), lambda v: 0 <= v <= 1, "in [0, 1]"),
        ("--nq", getattr(parsed, "nq", None), lambda v: v >= 1, ">= 1"),
        ("--nd", getattr(parsed, "nd", None), lambda v: v >= 1, ">= 1"),
        ("--alpha", getattr(parsed, "alpha", None), lambda v: 0 < v < 1, "in (0, 1)"),
    ]
    return [
        Status(StatusLevel.ERROR, str_resources.err_cli_range.format(flag=flag, rule=rule, value=value))
        for flag, value, ok, rule in checks
        if value is not None and not ok(value)
    ]


def _overrides(parsed: argparse.Namespace) -> dict[str, Any]:
    named = {
        "seed": parsed.seed,
        "threads": parsed.threads,
        "verbosity": parsed.verbose,
        "k1": parsed.k1,
        "b": parsed.b,
        "mu": parsed.mu,
        "qlt_normalize": parsed.qlt_normalize,
        "stem": parsed.stem,
        "fidelity_depth": getattr(parsed, "depth", None),
        "segment_reduction": getattr(parsed, "reduction", None),
    }
    return {key: value for key, value in named.items() if value is not None}

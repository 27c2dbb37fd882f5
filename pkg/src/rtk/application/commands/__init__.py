"""Command handlers keyed by the command name set by the parser."""

from collections.abc import Callable

from ..command_context import CommandContext
from .eval_commands import eval_effectiveness, eval_fidelity
from .explain_commands import align_extract, traindata_phase1, traindata_phase2
from .probe_commands import probe_grid, probe_postfix, probe_years
from .retrieval_commands import index_build, search
from .thesaurus_commands import thesaurus_candidates, thesaurus_filter, thesaurus_ltog, thesaurus_top

Handler = Callable[[CommandContext], None]

COMMANDS: dict[str, Handler] = {
    "index build": index_build,
    "search": search,
    "thesaurus filter": thesaurus_filter,
    "thesaurus candidates": thesaurus_candidates,
    "thesaurus top": thesaurus_top,
    "thesaurus ltog": thesaurus_ltog,
    "align extract": align_extract,
    "traindata phase1": traindata_phase1,
    "traindata phase2": traindata_phase2,
    "eval effectiveness": eval_effectiveness,
    "eval fidelity": eval_fidelity,
    "probe grid": probe_grid,
    "probe postfix": probe_postfix,
    "probe years": probe_years,
}

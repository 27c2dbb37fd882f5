"""Local-to-global: turn per-query alignments into a global thesaurus.

score(qt, dt) = times qt was aligned to dt / occurrences of qt in the queries
"""

from __future__ import annotations

from collections import Counter, defaultdict
from collections.abc import Iterable, Mapping, Sequence
from typing import NamedTuple

from rtk.domain.analyzer_config import Term
from rtk.domain.errors import RtkError
from rtk.domain.status_level import Status, warning
from rtk.domain.thesaurus import Thesaurus, ThesaurusEntry

from .explain_resources import str_resources
from .training_data import PairScorer

ATTRIBUTIONS = ("argmax", "uniform")
DEFAULT_MIN_COUNT = 1


class Alignment(NamedTuple):
    qt: Term
    dt: Term
    weight: float = 1.0


def align_local_terms(
    q_terms: Sequence[Term],
    explanation_terms: Iterable[Term],
    scorer: PairScorer,
    attribution: str = "argmax",
) -> list[Alignment]:
    """Attribute each explanation document term to query terms.

    argmax credits the query term with the highest pair score (first in query
    order on ties, unscored terms never aligned); uniform credits every query
    term with 1/|q|.
    """
    if attribution not in ATTRIBUTIONS:
        raise RtkError(str_resources.err_attribution.format(name=attribution))
    query = list(dict.fromkeys(q_terms))
    if not query:
        return []
    alignments: list[Alignment] = []
    for dt in explanation_terms:
        if attribution == "uniform":
            alignments.extend(Alignment(qt, dt, 1.0 / len(query)) for qt in query)
            continue
        best: tuple[Term, float] | None = None
        for qt in query:
            score = scorer.score(qt, dt)
            if score is not None and (best is None or score > best[1]):
                best = (qt, score)
        if best is not None:
            alignments.append(Alignment(best[0], dt))
    return alignments


def ltog_thesaurus(
    alignments: Iterable[Alignment | tuple[Term, Term]],
    occurrences: Mapping[Term, int],
    min_count: float = DEFAULT_MIN_COUNT,
) -> tuple[Thesaurus, list[Status]]:
    """Pairs aligned at most min_count times are dropped; scores above 1 are clipped with a warning."""
    counts: dict[tuple[Term, Term], float] = defaultdict(float)
    for alignment in alignments:
        weight = alignment[2] if len(alignment) > 2 else 1.0
        counts[(alignment[0], alignment[1])] += weight

    entries: list[ThesaurusEntry] = []
    clipped = 0
    for (qt, dt), count in sorted(counts.items()):
        occurrence = occurrences.get(qt, 0)
        if occurrence <= 0:
            raise RtkError(str_resources.err_zero_occurrences.format(qt=qt))
        if count <= min_count:
            continue
        score = count / occurrence
        if score > 1.0:
            clipped += 1
            score = 1.0
        entries.append(ThesaurusEntry(qt, dt, score))

    statuses = [warning(str_resources.warn_ltog_clipped.format(count=clipped))] if clipped else []
    return Thesaurus(entries), statuses


def count_occurrences(queries: Iterable[Sequence[Term]]) -> Counter[Term]:
    totals: Counter[Term] = Counter()
    for q_terms in queries:
        totals.update(q_terms)
    return totals

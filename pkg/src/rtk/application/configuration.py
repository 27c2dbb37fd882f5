from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any

from rtk.analysis.analyzer import default_analyzer_config
from rtk.domain.analyzer_config import AnalyzerConfig
from rtk.domain.params import Bm25Params, QlParams

CONFIG_FILE_NAME = "rtk-config.yaml"
CONFIG_ENV_VAR = "RTK_CONFIG"

DEFAULT_SEED = 7
DEFAULT_THREADS = 1
DEFAULT_VERBOSITY = 2
DEFAULT_FIDELITY_DEPTH = 1000
DEFAULT_MRR_CUTOFF = 10
DEFAULT_SEGMENT_REDUCTION = "max"


@dataclass
class Configuration:
    # tokenizer, stopwords and stemming used when building an index
    analyzer: AnalyzerConfig = field(default_factory=default_analyzer_config)

    bm25: Bm25Params = field(default_factory=Bm25Params)

    # Dirichlet mu and the QLT row normalization switch
    ql: QlParams = field(default_factory=QlParams)

    # seeds every stochastic step (query partitions, deletion counts, phase-2 term picks)
    seed: int = DEFAULT_SEED

    # worker threads; output order never depends on this
    threads: int = DEFAULT_THREADS

    # default --index / --thesaurus when the flags are omitted
    index_path: str | None = None
    thesaurus_path: str | None = None

    # 0 silent, 1 warnings and summary, 2 everything
    verbosity: int = DEFAULT_VERBOSITY

    # documents per query kept from the reference run for fidelity
    fidelity_depth: int = DEFAULT_FIDELITY_DEPTH

    # cutoff used by a bare 'mrr' metric name
    mrr_cutoff: int = DEFAULT_MRR_CUTOFF

    # how a query partition's words are reduced into one relevance per document word: max or sum
    segment_reduction: str = DEFAULT_SEGMENT_REDUCTION

    # path of the config file in effect, None when only defaults and flags apply
    config_file: str | None = None

    def to_dict(self) -> dict[str, Any]:
        """Effective configuration as echoed in report headers.

        threads and verbosity are left out: they never change an output.
        """
        return {
            "analyzer": {
                "stem": self.analyzer.stem,
                "lowercase": self.analyzer.lowercase,
                "token_pattern": self.analyzer.token_pattern,
                "stopwords": len(self.analyzer.stopwords),
                "stemmer_version": self.analyzer.stemmer_version,
            },
            "bm25": {"k1": self.bm25.k1, "b": self.bm25.b},
            "ql": {"mu": self.ql.mu, "qlt_normalize": self.ql.qlt_normalize},
            "seed": self.seed,
            "fidelity_depth": self.fidelity_depth,
            "mrr_cutoff": self.mrr_cutoff,
            "segment_reduction": self.segment_reduction,
        }

    @classmethod
    def merge(cls, file_config: Configuration, overrides: dict[str, Any], config_path: str | None) -> Configuration:
        """Apply command-line overrides on top of the file (or default) configuration.

        overrides uses the flat flag names: k1, b, mu, qlt_normalize, stem plus
        any top-level field name.
        """
        flat = dict(overrides)
        bm25 = replace(
            file_config.bm25,
            **{k: flat.pop(k) for k in ("k1", "b") if k in flat},
        )
        ql = replace(
            file_config.ql,
            **{k: flat.pop(k) for k in ("mu", "qlt_normalize") if k in flat},
        )
        analyzer = file_config.analyzer
        if "stem" in flat:
            analyzer = default_analyzer_config(
                stopwords=analyzer.stopwords,
                stem=flat.pop("stem"),
                lowercase=analyzer.lowercase,
                token_pattern=analyzer.token_pattern,
            )
        return replace(file_config, analyzer=analyzer, bm25=bm25, ql=ql, config_file=config_path, **flat)

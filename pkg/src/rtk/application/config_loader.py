from __future__ import annotations

import os
import re
from pathlib import Path
from typing import Any

import yaml

from rtk.analysis.analyzer import default_analyzer_config
from rtk.analysis.stemmer import parse_word_list
from rtk.domain.analyzer_config import DEFAULT_TOKEN_PATTERN
from rtk.domain.params import DEFAULT_B, DEFAULT_K1, DEFAULT_MU, Bm25Params, QlParams
from rtk.domain.status_level import Status, StatusLevel, has_errors
from rtk.infrastructure.file_util import read_text

from .application_resources import str_resources
from .configuration import (
    CONFIG_ENV_VAR,
    CONFIG_FILE_NAME,
    DEFAULT_FIDELITY_DEPTH,
    DEFAULT_MRR_CUTOFF,
    DEFAULT_SEED,
    DEFAULT_SEGMENT_REDUCTION,
    DEFAULT_THREADS,
    DEFAULT_VERBOSITY,
    Configuration,
)

_NUMBER = (int, float)

# top-level scalar keys mapped to their expected type
_CONFIG_FIELDS: dict[str, type | tuple[type, ...]] = {
    "seed": int,
    "threads": int,
    "verbosity": int,
    "index_path": str,
    "thesaurus_path": str,
    "fidelity_depth": int,
    "mrr_cutoff": int,
    "segment_reduction": str,
}

_SECTION_FIELDS: dict[str, dict[str, type | tuple[type, ...]]] = {
    "analyzer": {"stem": bool, "lowercase": bool, "token_pattern": str, "stopwords": list, "stopwords_file": str},
    "bm25": {"k1": _NUMBER, "b": _NUMBER},
    "ql": {"mu": _NUMBER, "qlt_normalize": bool},
}

_DEFAULT_CONFIG_TEMPLATE = f"""\
# rtk configuration file
# command-line flags override these values; $RTK_CONFIG points at an alternative file

# seed for every stochastic step
seed: {DEFAULT_SEED}

# worker threads (output does not depend on this)
threads: {DEFAULT_THREADS}

# 0 silent, 1 warnings and summary, 2 everything
verbosity: {DEFAULT_VERBOSITY}

# defaults for --index and --thesaurus
# index_path: corpus.idx
# thesaurus_path: thesaurus.tsv

# documents per query taken from the reference run for fidelity
fidelity_depth: {DEFAULT_FIDELITY_DEPTH}

# cutoff for a bare 'mrr' metric
mrr_cutoff: {DEFAULT_MRR_CUTOFF}

# partition reduction for segment deletion: max or sum
segment_reduction: {DEFAULT_SEGMENT_REDUCTION}

analyzer:
  stem: true
  lowercase: true
  token_pattern: '{DEFAULT_TOKEN_PATTERN}'
  # stopwords_file: stopwords.txt

bm25:
  k1: {DEFAULT_K1}
  b: {DEFAULT_B}

ql:
  mu: {DEFAULT_MU}
  qlt_normalize: false
"""


def generate_default_config(directory: str) -> tuple[str, list[Status]]:
    """Write a default rtk-config.yaml into directory."""
    dir_path = Path(directory)
    if not dir_path.is_dir():
        return "", [Status(StatusLevel.ERROR, str_resources.err_config_no_dir.format(directory=directory))]

    config_path = dir_path / CONFIG_FILE_NAME
    if config_path.exists():
        return "", [Status(StatusLevel.ERROR, str_resources.err_config_dir_exist.format(config_path=config_path))]

    config_path.write_text(_DEFAULT_CONFIG_TEMPLATE, encoding="utf-8")
    return str(config_path), []


def discover_config(explicit: str | None) -> str | None:
    """--config, else $RTK_CONFIG, else ./rtk-config.yaml when present."""
    if explicit:
        return explicit
    from_env = os.environ.get(CONFIG_ENV_VAR)
    if from_env:
        return from_env
    local = Path.cwd() / CONFIG_FILE_NAME
    return str(local) if local.is_file() else None


def load_config_file(path: str) -> tuple[Configuration, list[Status]]:
    config_path = Path(path)
    if not config_path.is_file():
        return Configuration(), [Status(StatusLevel.ERROR, str_resources.err_config_no_file.format(path=path))]

    try:
        raw = yaml.safe_load(config_path.read_text(encoding="utf-8"))
    except yaml.YAMLError as e:
        return Configuration(), [Status(StatusLevel.ERROR, str_resources.err_config_parse.format(path=path, error=e))]

    if raw is None:
        return Configuration(), []

    if not isinstance(raw, dict):
        return Configuration(), [Status(StatusLevel.ERROR, str_resources.err_config_not_mapping.format(path=path))]

    return _parse_config(raw, config_path.parent)


def _type_name(expected: type | tuple[type, ...]) -> str:
    if isinstance(expected, tuple):
        return "number"
    return expected.__name__


def _has_type(value: Any, expected: type | tuple[type, ...]) -> bool:
    # bool is an int subclass; never accept it for numeric keys
    if isinstance(value, bool) and expected is not bool:
        return False
    return isinstance(value, expected)


def _typed_values(
    raw: dict[str, Any], fields: dict[str, type | tuple[type, ...]], prefix: str = ""
) -> tuple[dict[str, Any], list[Status]]:
    values: dict[str, Any] = {}
    errors: list[Status] = []
    for key, value in raw.items():
        name = f"{prefix}{key}"
        if key not in fields:
            errors.append(Status(StatusLevel.WARNING, str_resources.warn_config_unknown_key.format(key=name)))
            continue
        if value is None:
            continue
        expected = fields[key]
        if not _has_type(value, expected):
            msg = str_resources.err_config_type.format(
                key=name, expected=_type_name(expected), got=type(value).__name__
            )
            errors.append(Status(StatusLevel.ERROR, msg))
            continue
        values[key] = value
    return values, errors


def _parse_config(raw: dict[str, Any], base_dir: Path) -> tuple[Configuration, list[Status]]:
    """Validate and parse a raw YAML mapping into a Configuration."""
    top = {k: v for k, v in raw.items() if k not in _SECTION_FIELDS}
    overrides, errors = _typed_values(top, _CONFIG_FIELDS)

    sections: dict[str, dict[str, Any]] = {}
    for section, fields in _SECTION_FIELDS.items():
        value = raw.get(section)
        if value is None:
            sections[section] = {}
            continue
        if not isinstance(value, dict):
            errors.append(Status(StatusLevel.ERROR, str_resources.err_config_section.format(section=section)))
            sections[section] = {}
            continue
        sections[section], section_errors = _typed_values(value, fields, f"{section}.")
        errors.extend(section_errors)

    if has_errors(errors):
        return Configuration(), errors

    range_errors = _validate_ranges(overrides, sections)
    if range_errors:
        return Configuration(), errors + range_errors

    analyzer, analyzer_errors = _build_analyzer(sections["analyzer"], base_dir)
    errors.extend(analyzer_errors)
    if analyzer is None:
        return Configuration(), errors

    config = Configuration(
        analyzer=analyzer,
        bm25=Bm25Params(**{k: float(v) for k, v in sections["bm25"].items()}),
        ql=QlParams(**{k: (float(v) if k == "mu" else v) for k, v in sections["ql"].items()}),
        **overrides,
    )
    return config, errors


def _validate_ranges(overrides: dict[str, Any], sections: dict[str, dict[str, Any]]) -> list[Status]:
    checks = [
        (overrides.get("threads", 1) >= 1, "threads", ">= 1", overrides.get("threads")),
        (overrides.get("verbosity", 2) in (0, 1, 2), "verbosity", "0, 1 or 2", overrides.get("verbosity")),
        (overrides.get("fidelity_depth", 1) >= 1, "fidelity_depth", ">= 1", overrides.get("fidelity_depth")),
        (overrides.get("mrr_cutoff", 1) >= 1, "mrr_cutoff", ">= 1", overrides.get("mrr_cutoff")),
        (
            overrides.get("segment_reduction", "max") in ("max", "sum"),
            "segment_reduction",
            "max or sum",
            overrides.get("segment_reduction"),
        ),
        (sections["bm25"].get("k1", 0) >= 0, "bm25.k1", ">= 0", sections["bm25"].get("k1")),
        (0 <= sections["bm25"].get("b", 0) <= 1, "bm25.b", "in [0, 1]", sections["bm25"].get("b")),
        (sections["ql"].get("mu", 1) > 0, "ql.mu", "> 0", sections["ql"].get("mu")),
    ]
    return [
        Status(StatusLevel.ERROR, str_resources.err_config_range.format(key=key, rule=rule, value=value))
        for ok, key, rule, value in checks
        if not ok
    ]


def _build_analyzer(section: dict[str, Any], base_dir: Path) -> tuple[Any, list[Status]]:
    pattern = section.get("token_pattern", DEFAULT_TOKEN_PATTERN)
    try:
        re.compile(pattern)
    except re.error as e:
        return None, [Status(StatusLevel.ERROR, str_resources.err_config_pattern.format(pattern=pattern, error=e))]

    stopwords: frozenset[str] | None = None
    if "stopwords" in section:
        stopwords = frozenset(str(w) for w in section["stopwords"])
    if "stopwords_file" in section:
        stop_path = base_dir / section["stopwords_file"]
        text, errors = read_text(str(stop_path))
        if text is None:
            return None, errors
        stopwords = (stopwords or frozenset()) | frozenset(parse_word_list(text))

    analyzer = default_analyzer_config(
        stopwords=stopwords,
        stem=section.get("stem", True),
        lowercase=section.get("lowercase", True),
        token_pattern=pattern,
    )
    return analyzer, []

"""Direct I/O helpers used by orchestration for primary tool output."""

from __future__ import annotations

import json
import sys
from collections.abc import Sequence

from rtk.domain.status_level import Status

from .configuration import Configuration

CONFIG_HEADER_PREFIX = "config: "


def present_errors(errors: Sequence[Status] | str) -> None:
    """Print errors to stderr."""
    if isinstance(errors, str):
        print(f"error: {errors}", file=sys.stderr)
        return
    for error in errors:
        print(f"error: {error.description}", file=sys.stderr)


def present_result(result: str) -> None:
    """Print a report to stdout."""
    print(result, end="")


def config_header(config: Configuration) -> str:
    """The effective configuration as a single report header line."""
    return CONFIG_HEADER_PREFIX + json.dumps(config.to_dict(), sort_keys=True)

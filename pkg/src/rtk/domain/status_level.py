from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum


class StatusLevel(Enum):
    OK = 1
    WARNING = 2
    ERROR = 3
    FATAL = 4


@dataclass(frozen=True)
class Status:
    level: StatusLevel
    description: str

    @property
    def is_error(self) -> bool:
        return self.level in (StatusLevel.ERROR, StatusLevel.FATAL)


def has_errors(statuses: Iterable[Status]) -> bool:
    """True if any status is ERROR or FATAL."""
    return any(s.is_error for s in statuses)


def warning(description: str) -> Status:
    return Status(StatusLevel.WARNING, description)


def error(description: str) -> Status:
    return Status(StatusLevel.ERROR, description)

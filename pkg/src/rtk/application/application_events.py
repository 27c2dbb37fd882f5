"""Events emitted by the application layer (session, stages, diagnostics, outputs)."""

from dataclasses import dataclass, field
from typing import Any

from rtk.domain.status_level import StatusLevel
from rtk.infrastructure.events import RtkEvent

# --- Session lifecycle ---


@dataclass(frozen=True)
class SessionStarted(RtkEvent):
    """Emitted once per command, after the configuration is resolved."""

    version: str
    command: str
    config_source: str
    effective_config: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class SessionComplete(RtkEvent):
    command: str
    exit_code: int
    elapsed: float
    warning_count: int = 0


# --- Stages ---


@dataclass(frozen=True)
class StageStarted(RtkEvent):
    """A unit of work such as loading an index or ranking queries; total is None when unknown."""

    stage: str
    total: int | None = None


@dataclass(frozen=True)
class StageCompleted(RtkEvent):
    stage: str
    count: int
    elapsed: float


# --- Diagnostics and outputs ---


@dataclass(frozen=True)
class DiagnosticRaised(RtkEvent):
    level: StatusLevel
    message: str


@dataclass(frozen=True)
class OutputWritten(RtkEvent):
    """path is '-' for stdout."""

    path: str
    count: int

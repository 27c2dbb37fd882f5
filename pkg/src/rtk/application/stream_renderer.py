"""StreamRenderer: plain line-by-line diagnostics on stderr."""

from __future__ import annotations

import json
import sys
from typing import TextIO

from rtk.domain.status_level import StatusLevel
from rtk.infrastructure.events import EventDispatcher
from rtk.infrastructure.file_util import to_relative

from .application_events import (
    DiagnosticRaised,
    OutputWritten,
    SessionComplete,
    SessionStarted,
    StageCompleted,
    StageStarted,
)
from .application_resources import str_resources

_PREFIX = {
    StatusLevel.OK: "[OK]",
    StatusLevel.WARNING: "[WARN]",
    StatusLevel.ERROR: "[ERR]",
    StatusLevel.FATAL: "[ERR]",
}


class StreamRenderer:
    """Subscribes to application events and prints them to stderr.

    verbosity 0 prints nothing, 1 prints warnings, errors and the summary,
    2 adds the session header, stages and written outputs.
    """

    def __init__(self, verbosity: int, stream: TextIO | None = None) -> None:
        self._verbosity = verbosity
        self._stream = stream
        self.warning_count = 0

    def subscribe(self, dispatcher: EventDispatcher) -> None:
        dispatcher.subscribe(SessionStarted, self._on_session_started)
        dispatcher.subscribe(StageStarted, self._on_stage_started)
        dispatcher.subscribe(StageCompleted, self._on_stage_completed)
        dispatcher.subscribe(DiagnosticRaised, self._on_diagnostic)
        dispatcher.subscribe(OutputWritten, self._on_output_written)
        dispatcher.subscribe(SessionComplete, self._on_session_complete)

    def _print(self, text: str) -> None:
        print(text, file=self._stream or sys.stderr)

    # --- event handlers ---

    def _on_session_started(self, event: SessionStarted) -> None:
        if self._verbosity >= 2:
            self._print(f"rtk v{event.version} {event.command}")
            self._print(f"Config: {event.config_source}")
            self._print(f"Effective: {json.dumps(event.effective_config, sort_keys=True)}")

    def _on_stage_started(self, event: StageStarted) -> None:
        if self._verbosity >= 2:
            suffix = f" ({event.total})" if event.total is not None else ""
            self._print(f"{event.stage}{suffix}")

    def _on_stage_completed(self, event: StageCompleted) -> None:
        if self._verbosity >= 2:
            self._print(f"  [OK] {event.elapsed:.2f}s  {event.stage}: {event.count}")

    def _on_diagnostic(self, event: DiagnosticRaised) -> None:
        if event.level == StatusLevel.WARNING:
            self.warning_count += 1
        if event.level == StatusLevel.OK:
            if self._verbosity >= 2:
                self._print(event.message)
            return
        if self._verbosity >= 1:
            self._print(f"{_PREFIX[event.level]} {event.message}")

    def _on_output_written(self, event: OutputWritten) -> None:
        if self._verbosity >= 2 and event.path != "-":
            self._print(f"[OK] {to_relative(event.path)} ({event.count})")

    def _on_session_complete(self, event: SessionComplete) -> None:
        if self._verbosity < 1:
            return
        if event.exit_code == 0:
            line = str_resources.summary_ok.format(command=event.command, elapsed=event.elapsed)
        else:
            line = str_resources.summary_failed.format(
                command=event.command, exit_code=event.exit_code, elapsed=event.elapsed
            )
        if event.warning_count:
            line += ", " + str_resources.summary_warnings.format(count=event.warning_count)
        self._print(line)
        if event.exit_code != 0 and self._verbosity < 2:
            self._print(str_resources.verbose_hint)

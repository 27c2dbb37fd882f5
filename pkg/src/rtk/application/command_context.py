"""Shared plumbing for command handlers: diagnostics, stages, loading and writing."""

from __future__ import annotations

import argparse
import time
from collections.abc import Iterable, Iterator, Sequence
from contextlib import contextmanager
from dataclasses import dataclass
from typing import TypeVar

from rtk.domain.corpus_index import CorpusIndex
from rtk.domain.status_level import Status, StatusLevel, has_errors
from rtk.domain.thesaurus import Thesaurus
from rtk.infrastructure.events import EventDispatcher
from rtk.infrastructure.file_util import format_tsv, write_tsv
from rtk.infrastructure.index_store import load_index
from rtk.infrastructure.thesaurus_io import load_thesaurus

from .application_events import DiagnosticRaised, OutputWritten, StageCompleted, StageStarted
from .application_resources import str_resources
from .cli import UsageError
from .configuration import Configuration
from .output_util import config_header, present_result

_T = TypeVar("_T")

STDOUT = "-"


class CommandFailed(Exception):
    """A command hit invalid data; its diagnostics have already been emitted. Maps to exit code 2."""

    def __init__(self, statuses: Sequence[Status]) -> None:
        super().__init__("; ".join(s.description for s in statuses))
        self.statuses = list(statuses)


class StageCounter:
    def __init__(self) -> None:
        self.count = 0


@dataclass
class CommandContext:
    config: Configuration
    options: argparse.Namespace
    dispatcher: EventDispatcher

    # --- diagnostics ---

    def report(self, statuses: Iterable[Status]) -> None:
        """Forward statuses to the renderer; stop the command if any is an error."""
        statuses = list(statuses)
        for status in statuses:
            self.dispatcher.emit(DiagnosticRaised(status.level, status.description))
        if has_errors(statuses):
            raise CommandFailed([s for s in statuses if s.is_error])

    def warn(self, message: str) -> None:
        self.dispatcher.emit(DiagnosticRaised(StatusLevel.WARNING, message))

    def info(self, message: str) -> None:
        self.dispatcher.emit(DiagnosticRaised(StatusLevel.OK, message))

    def loaded(self, result: tuple[_T | None, list[Status]]) -> _T:
        """Unwrap a loader result, reporting its statuses."""
        value, statuses = result
        self.report(statuses)
        if value is None:
            raise CommandFailed(statuses)
        return value

    @contextmanager
    def stage(self, name: str, total: int | None = None) -> Iterator[StageCounter]:
        self.dispatcher.emit(StageStarted(name, total))
        counter = StageCounter()
        start = time.perf_counter()
        yield counter
        self.dispatcher.emit(StageCompleted(name, counter.count, time.perf_counter() - start))

    # --- options ---

    def require(self, flag: str, value: str | None) -> str:
        if not value:
            raise UsageError(str_resources.err_cli_required.format(flag=flag))
        return value

    def index_path(self) -> str:
        return self.require("--index", getattr(self.options, "index", None) or self.config.index_path)

    def thesaurus_path(self) -> str | None:
        return getattr(self.options, "thesaurus", None) or self.config.thesaurus_path

    # --- loading ---

    def load_index(self) -> CorpusIndex:
        with self.stage("loading index") as counter:
            index = self.loaded(load_index(self.index_path()))
            counter.count = index.n_docs
        return index

    def load_thesaurus(self, path: str) -> Thesaurus:
        with self.stage("loading thesaurus") as counter:
            thesaurus = self.loaded(load_thesaurus(path))
            counter.count = len(thesaurus)
        return thesaurus

    # --- writing ---

    def header_lines(self) -> list[str]:
        return [config_header(self.config)]

    def write_report(self, rows: Sequence[Sequence[object]], out: str | None) -> None:
        """TSV report to a file or stdout, headed by the effective configuration."""
        if out:
            self.written(out, write_tsv(out, rows, self.header_lines()))
            return
        present_result(format_tsv(rows, self.header_lines()))
        self.written(STDOUT, len(rows))

    def written(self, path: str, count: int) -> None:
        self.dispatcher.emit(OutputWritten(path, count))

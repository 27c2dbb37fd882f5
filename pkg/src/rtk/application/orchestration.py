from __future__ import annotations

import sys
import time
import traceback
from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as pkg_version

from rtk.domain.status_level import Status, StatusLevel, has_errors
from rtk.infrastructure.events import EventDispatcher

from .application_events import DiagnosticRaised, SessionComplete, SessionStarted
from .application_resources import str_resources
from .cli import CommandLine, UsageError, parse_command_line_arguments
from .command_context import CommandContext, CommandFailed
from .commands import COMMANDS
from .config_loader import discover_config, generate_default_config, load_config_file
from .configuration import Configuration
from .output_util import present_errors, present_result
from .stream_renderer import StreamRenderer

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3


def main() -> None:
    """Entry point for the rtk CLI."""
    sys.exit(dispatch(sys.argv[1:]))


def dispatch(argv: list[str] | None = None) -> int:
    """Run one command line and return its exit code. Results go to files or stdout, diagnostics to stderr."""
    start_time = time.perf_counter()

    try:
        command_line, errors = parse_command_line_arguments(argv)
    except UsageError as e:
        present_errors(str(e))
        return EXIT_USAGE
    except SystemExit as e:
        # --help exits through argparse
        return e.code if isinstance(e.code, int) else EXIT_OK
    if errors:
        present_errors(errors)
        return EXIT_USAGE

    if command_line.init_path is not None:
        return _handle_init(command_line.init_path)

    config, config_statuses = _resolve_config(command_line)
    if has_errors(config_statuses):
        present_errors([s for s in config_statuses if s.is_error])
        return EXIT_USAGE

    command = command_line.command or ""
    dispatcher = EventDispatcher()
    renderer = StreamRenderer(config.verbosity)
    renderer.subscribe(dispatcher)

    for status in config_statuses:
        dispatcher.emit(DiagnosticRaised(status.level, status.description))
    dispatcher.emit(
        SessionStarted(
            version=_version(),
            command=command,
            config_source=config.config_file or "DEFAULT",
            effective_config=config.to_dict(),
        )
    )

    context = CommandContext(config, command_line.options, dispatcher)
    exit_code = _run_command(command, context)

    dispatcher.emit(
        SessionComplete(
            command=command,
            exit_code=exit_code,
            elapsed=time.perf_counter() - start_time,
            warning_count=renderer.warning_count,
        )
    )
    return exit_code


def _run_command(command: str, context: CommandContext) -> int:
    """Map handler outcomes to exit codes."""
    try:
        COMMANDS[command](context)
    except UsageError as e:
        present_errors(str(e))
        return EXIT_USAGE
    except CommandFailed:
        # diagnostics were emitted as they were found
        return EXIT_DATA
    except (ValueError, OSError) as e:
        context.dispatcher.emit(DiagnosticRaised(StatusLevel.ERROR, str_resources.err_data.format(error=e)))
        return EXIT_DATA
    except Exception as e:  # noqa: BLE001
        context.dispatcher.emit(DiagnosticRaised(StatusLevel.ERROR, str_resources.err_internal.format(error=e)))
        if context.config.verbosity >= 2:
            traceback.print_exc(file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def _handle_init(directory: str) -> int:
    """Generate a default config file."""
    path, errors = generate_default_config(directory)
    if errors:
        present_errors(errors)
        return EXIT_USAGE
    present_result(str_resources.info_created_config.format(path=path) + "\n")
    return EXIT_OK


def _resolve_config(command_line: CommandLine) -> tuple[Configuration, list[Status]]:
    """defaults, then the config file (explicit, $RTK_CONFIG or ./rtk-config.yaml), then flags."""
    config_path = discover_config(command_line.config_file)
    file_config = Configuration()
    statuses: list[Status] = []
    if config_path is not None:
        file_config, statuses = load_config_file(config_path)
        if has_errors(statuses):
            return file_config, statuses
    return Configuration.merge(file_config, command_line.overrides, config_path), statuses


def _version() -> str:
    try:
        return pkg_version("rtk")
    except PackageNotFoundError:
        return "unknown"

from __future__ import annotations

from pathlib import Path

import pytest

from rtk.application.command_context import CommandContext
from rtk.application.commands import COMMANDS
from rtk.application.configuration import CONFIG_ENV_VAR, CONFIG_FILE_NAME
from rtk.application.orchestration import EXIT_DATA, EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, dispatch

FIXTURES = Path(__file__).parents[2] / "fixtures"


@pytest.fixture(autouse=True)
def _isolated(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    """No config file is discovered unless a test writes one."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)


def _build_index(tmp_path: Path) -> str:
    out = str(tmp_path / "corpus.idx")
    assert dispatch(["index", "build", "--corpus", str(FIXTURES / "corpus.jsonl"), "--out", out, "-v", "0"]) == EXIT_OK
    return out


# --- usage ---


def test_help_exits_zero(capsys: pytest.CaptureFixture[str]) -> None:
    assert dispatch(["--help"]) == EXIT_OK
    assert "relevance thesaurus toolkit" in capsys.readouterr().out


def test_no_command_is_a_usage_error(capsys: pytest.CaptureFixture[str]) -> None:
    assert dispatch([]) == EXIT_USAGE
    assert capsys.readouterr().err.startswith("error: ")


def test_out_of_range_flag_is_a_usage_error() -> None:
    assert dispatch(["search", "--scorer", "bm25", "--queries", "q.tsv", "-k", "0"]) == EXIT_USAGE


def test_missing_index_is_a_usage_error(capsys: pytest.CaptureFixture[str]) -> None:
    code = dispatch(["search", "--scorer", "bm25", "--queries", str(FIXTURES / "queries.tsv"), "-v", "0"])

    assert code == EXIT_USAGE
    assert "--index" in capsys.readouterr().err


def test_thesaurus_scorer_without_thesaurus_is_a_usage_error(tmp_path: Path) -> None:
    index = _build_index(tmp_path)

    code = dispatch(
        ["search", "--index", index, "--scorer", "bm25t", "--queries", str(FIXTURES / "queries.tsv"), "-v", "0"]
    )

    assert code == EXIT_USAGE


def test_probe_needs_exactly_one_scorer_source(tmp_path: Path) -> None:
    rows = tmp_path / "years.jsonl"
    rows.write_text('{"query": "when", "template": "in {year}", "start": 2010, "end": 2012}\n', encoding="utf-8")

    assert dispatch(["probe", "years", "--in", str(rows), "-v", "0"]) == EXIT_USAGE


# --- configuration ---


def test_init_writes_config_once(tmp_path: Path) -> None:
    assert dispatch(["--init", str(tmp_path)]) == EXIT_OK
    assert (tmp_path / CONFIG_FILE_NAME).is_file()
    assert dispatch(["--init", str(tmp_path)]) == EXIT_USAGE


def test_invalid_config_is_a_usage_error(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    (tmp_path / CONFIG_FILE_NAME).write_text("bm25:\n  b: 3\n", encoding="utf-8")

    code = dispatch(["search", "--scorer", "bm25", "--queries", "q.tsv"])

    assert code == EXIT_USAGE
    assert "'bm25.b'" in capsys.readouterr().err


def test_config_from_environment_supplies_index(
    tmp_path: Path, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
) -> None:
    index = _build_index(tmp_path)
    config = tmp_path / "alt.yaml"
    config.write_text(f"index_path: {index}\nverbosity: 0\n", encoding="utf-8")
    monkeypatch.setenv(CONFIG_ENV_VAR, str(config))
    capsys.readouterr()

    code = dispatch(["search", "--scorer", "bm25", "--queries", str(FIXTURES / "queries.tsv"), "-k", "2"])

    assert code == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines
    assert all(len(line.split()) == 6 for line in lines)


def test_session_header_names_config_source(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    (tmp_path / CONFIG_FILE_NAME).write_text("seed: 5\n", encoding="utf-8")

    dispatch(["index", "build", "--corpus", str(FIXTURES / "corpus.jsonl"), "--out", "c.idx", "-v", "2"])

    err = capsys.readouterr().err
    assert "Config: " in err and CONFIG_FILE_NAME in err
    assert '"seed": 5' in err


# --- exit codes ---


def test_missing_input_file_is_a_data_error(capsys: pytest.CaptureFixture[str]) -> None:
    code = dispatch(["index", "build", "--corpus", "absent.jsonl", "--out", "c.idx", "-v", "1"])

    assert code == EXIT_DATA
    assert "[ERR]" in capsys.readouterr().err


def test_value_error_from_handler_is_a_data_error(monkeypatch: pytest.MonkeyPatch) -> None:
    def fail(ctx: CommandContext) -> None:
        raise ValueError("bad data")

    monkeypatch.setitem(COMMANDS, "probe years", fail)

    assert dispatch(["probe", "years", "--in", "y.jsonl", "-v", "0"]) == EXIT_DATA


def test_unexpected_exception_is_an_internal_error(monkeypatch: pytest.MonkeyPatch) -> None:
    def crash(ctx: CommandContext) -> None:
        raise RuntimeError("boom")

    monkeypatch.setitem(COMMANDS, "probe years", crash)

    assert dispatch(["probe", "years", "--in", "y.jsonl", "-v", "0"]) == EXIT_INTERNAL


def test_report_on_stdout_carries_config_header(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    index = _build_index(tmp_path)
    thesaurus = str(FIXTURES / "thesaurus_entries.tsv")
    capsys.readouterr()

    code = dispatch(["thesaurus", "top", "--index", index, "--in", thesaurus, "-k", "3", "-v", "0"])

    assert code == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("# config: {")
    assert len(lines) == 4

"""Integration tests: the CLI end to end on the fixture corpus, no mocks."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from rtk.application.configuration import CONFIG_ENV_VAR
from rtk.application.orchestration import EXIT_OK, dispatch
from rtk.infrastructure.index_store import load_index
from rtk.infrastructure.thesaurus_io import load_thesaurus
from rtk.infrastructure.trec_io import read_run

FIXTURES = Path(__file__).parents[1] / "fixtures"


@pytest.fixture(autouse=True)
def _isolated(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)


def _rtk(*args: str) -> None:
    assert dispatch([*args, "-v", "0"]) == EXIT_OK, args


def _report_rows(path: Path) -> list[list[str]]:
    return [line.split("\t") for line in path.read_text(encoding="utf-8").splitlines() if not line.startswith("#")]


@pytest.fixture
def index_path(tmp_path: Path) -> str:
    out = str(tmp_path / "corpus.idx")
    _rtk("index", "build", "--corpus", str(FIXTURES / "corpus.jsonl"), "--out", out)
    return out


# --- index and search ---


def test_index_build_writes_loadable_index(index_path: str) -> None:
    index, errors = load_index(index_path)

    assert not errors
    assert index is not None
    assert index.n_docs == 10


def test_search_then_evaluate(tmp_path: Path, index_path: str) -> None:
    bm25 = tmp_path / "bm25.trec"
    bm25t = tmp_path / "bm25t.trec"
    report = tmp_path / "effectiveness.tsv"
    queries = str(FIXTURES / "queries.tsv")
    thesaurus = str(FIXTURES / "thesaurus_entries.tsv")

    _rtk("search", "--index", index_path, "--scorer", "bm25", "--queries", queries, "--out", str(bm25))
    _rtk(
        "search", "--index", index_path, "--scorer", "bm25t", "--thesaurus", thesaurus,
        "--queries", queries, "--out", str(bm25t),
    )  # fmt: skip
    _rtk(
        "eval", "effectiveness", "--run", str(bm25t), "--qrels", str(FIXTURES / "qrels.txt"),
        "--metric", "mrr@10", "--compare", str(bm25), "--out", str(report),
    )  # fmt: skip

    run, _ = read_run(str(bm25t))
    assert run is not None
    assert set(run) <= {"q1", "q2", "q3", "q4"}
    rows = _report_rows(report)
    assert ["mrr@10", "all"] == rows[-2][:2]
    assert rows[-1][:2] == ["mrr@10", "t_test"]
    assert report.read_text(encoding="utf-8").startswith("# config: {")


def test_compare_on_a_single_query_skips_the_t_test(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    run_a = tmp_path / "a.trec"
    run_b = tmp_path / "b.trec"
    qrels = tmp_path / "qrels.txt"
    report = tmp_path / "effectiveness.tsv"
    run_a.write_text("q1 Q0 d1 1 2.0 a\nq1 Q0 d2 2 1.0 a\n", encoding="utf-8")
    run_b.write_text("q1 Q0 d2 1 2.0 b\nq1 Q0 d1 2 1.0 b\n", encoding="utf-8")
    qrels.write_text("q1 0 d1 1\n", encoding="utf-8")

    code = dispatch([
        "eval", "effectiveness", "--run", str(run_a), "--qrels", str(qrels), "--metric", "mrr@10",
        "--compare", str(run_b), "--out", str(report), "-v", "1",
    ])  # fmt: skip

    assert code == EXIT_OK
    rows = _report_rows(report)
    assert [row[:2] for row in rows] == [["mrr@10", "q1"], ["mrr@10", "all"]]
    assert [float(v) for v in rows[0][2:]] == [1.0, 0.5]
    assert "t-test needs at least 2" in capsys.readouterr().err


def test_fidelity_of_run_with_itself_is_one(tmp_path: Path, index_path: str) -> None:
    run = tmp_path / "bm25.trec"
    report = tmp_path / "fidelity.tsv"
    _rtk("search", "--index", index_path, "--scorer", "ql", "--queries", str(FIXTURES / "queries.tsv"),
         "--out", str(run), "--full-scan")
    _rtk("eval", "fidelity", "--run-e", str(run), "--run-b", str(run), "--metric", "pearson", "--out", str(report))

    overall = [row for row in _report_rows(report) if row[1] == "all"]
    assert len(overall) == 1
    assert overall[0][0] == "pearson"
    assert float(overall[0][2]) == pytest.approx(1.0)


# --- thesaurus ---


def test_thesaurus_filter_keeps_pairs_above_threshold(tmp_path: Path) -> None:
    scored = tmp_path / "scored.tsv"
    scored.write_text("car\tvehicle\t0.68\ncar\tphone\t0.05\nknee\tinjury\t0.30\n", encoding="utf-8")
    out = tmp_path / "thesaurus.tsv"

    _rtk("thesaurus", "filter", "--in", str(scored), "--min-score", "0.1", "--out", str(out))

    thesaurus, errors = load_thesaurus(str(out))
    assert not errors
    assert thesaurus is not None
    assert thesaurus.score("car", "vehicle") == 0.68
    assert thesaurus.score("car", "phone") is None
    assert len(thesaurus) == 2


def test_candidates_pair_frequent_terms(tmp_path: Path, index_path: str) -> None:
    out = tmp_path / "candidates.tsv"

    _rtk("thesaurus", "candidates", "--index", index_path, "--nq", "3", "--nd", "4", "--out", str(out))

    rows = _report_rows(out)
    assert len(rows) == 12


def test_ltog_aggregates_explicit_alignments(tmp_path: Path) -> None:
    alignments = tmp_path / "alignments.jsonl"
    alignments.write_text(
        json.dumps({"query_terms": ["car"], "alignments": [["car", "vehicle"]]}) + "\n"
        + json.dumps({"query_terms": ["car"], "alignments": [["car", "vehicle"]]}) + "\n"
        + json.dumps({"query_terms": ["car", "price"], "alignments": [["car", "ford"]]}) + "\n",
        encoding="utf-8",
    )
    out = tmp_path / "ltog.tsv"

    _rtk("thesaurus", "ltog", "--alignments", str(alignments), "--out", str(out))

    thesaurus, _ = load_thesaurus(str(out))
    assert thesaurus is not None
    assert thesaurus.score("car", "vehicle") == pytest.approx(2 / 3)
    assert thesaurus.score("car", "ford") is None


def test_phase2_checks_stopword_terms_against_the_corpus(tmp_path: Path) -> None:
    corpus = tmp_path / "stop.jsonl"
    corpus.write_text(
        json.dumps({"doc_id": "p", "text": "the car is here"}) + "\n"
        + json.dumps({"doc_id": "n", "text": "the truck"}) + "\n",
        encoding="utf-8",
    )
    thesaurus = tmp_path / "stop_thesaurus.tsv"
    thesaurus.write_text("the\tcar\t0.3\nthe\ttruck\t0.2\nauto\tcar\t0.6\nauto\ttruck\t0.1\n", encoding="utf-8")
    triplets = tmp_path / "triplets.tsv"
    triplets.write_text("".join(f"q{i}\tthe auto\tp\tn\n" for i in range(10)), encoding="utf-8")
    index = str(tmp_path / "stop.idx")
    out = tmp_path / "phase2.jsonl"
    _rtk("index", "build", "--corpus", str(corpus), "--out", index, "--no-stem")

    _rtk(
        "traindata", "phase2", "--index", index, "--triplets", str(triplets), "--thesaurus", str(thesaurus),
        "--corpus", str(corpus), "--out", str(out),
    )  # fmt: skip

    records = [json.loads(line) for line in out.read_text(encoding="utf-8").splitlines()]
    assert len(records) == 10
    assert {r["qt"] for r in records} == {"auto"}


# --- probes ---


def test_year_probe_writes_report_and_chart(tmp_path: Path, index_path: str) -> None:
    sweeps = tmp_path / "years.jsonl"
    sweeps.write_text(
        json.dumps({"query": "when did the bridge open", "template": "The bridge opened in {year}",
                    "start": 2010, "end": 2012}) + "\n",
        encoding="utf-8",
    )
    report = tmp_path / "years.tsv"
    chart = tmp_path / "years.svg"

    _rtk(
        "probe", "years", "--in", str(sweeps), "--index", index_path, "--scorer", "bm25t",
        "--thesaurus", str(FIXTURES / "thesaurus_entries.tsv"), "--out", str(report), "--svg", str(chart),
    )  # fmt: skip

    rows = _report_rows(report)
    assert [row[1] for row in rows] == ["2010", "2011", "2012"]
    assert chart.read_text(encoding="utf-8").lstrip().startswith("<?xml")

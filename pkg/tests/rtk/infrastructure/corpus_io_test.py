from __future__ import annotations

from pathlib import Path

from rtk.domain.analyzer_config import Document
from rtk.domain.runs import Query, Triplet
from rtk.domain.status_level import StatusLevel
from rtk.infrastructure.corpus_io import read_corpus, read_queries, read_text_scores, read_triplets

FIXTURES = Path(__file__).parents[2] / "fixtures"


# --- corpus ---


def test_read_jsonl_corpus_fixture() -> None:
    docs, errors = read_corpus(str(FIXTURES / "corpus.jsonl"))

    assert errors == []
    assert docs is not None
    assert len(docs) == 10
    assert docs[0] == Document("d01", "The car dealership sells a new vehicle every week")


def test_read_tsv_corpus(tmp_path: Path) -> None:
    path = tmp_path / "corpus.tsv"
    path.write_text("d1\tfirst text\nd2\tsecond text\n", encoding="utf-8")

    docs, errors = read_corpus(str(path), "tsv")

    assert errors == []
    assert docs == [Document("d1", "first text"), Document("d2", "second text")]


def test_empty_doc_id_is_an_error(tmp_path: Path) -> None:
    path = tmp_path / "corpus.tsv"
    path.write_text(" \ttext\nd2\tok\n", encoding="utf-8")

    docs, errors = read_corpus(str(path), "tsv")

    assert docs == [Document("d2", "ok")]
    assert errors[0].level == StatusLevel.ERROR
    assert "empty doc_id" in errors[0].description


def test_unknown_corpus_format() -> None:
    docs, errors = read_corpus("whatever", "xml")

    assert docs is None
    assert "unknown corpus format" in errors[0].description


# --- queries and triplets ---


def test_read_queries_fixture() -> None:
    queries, errors = read_queries(str(FIXTURES / "queries.tsv"))

    assert errors == []
    assert queries is not None
    assert queries[0] == Query("q1", "car for sale")
    assert [q.qid for q in queries] == ["q1", "q2", "q3", "q4"]


def test_duplicate_qid_is_reported(tmp_path: Path) -> None:
    path = tmp_path / "queries.tsv"
    path.write_text("q1\ta\nq1\tb\n", encoding="utf-8")

    queries, errors = read_queries(str(path))

    assert queries == [Query("q1", "a")]
    assert "duplicate qid" in errors[0].description


def test_three_column_triplets_use_line_number_as_qid(tmp_path: Path) -> None:
    path = tmp_path / "triplets.tsv"
    path.write_text("# q pos neg\ncar for sale\td01\td08\nq9\tweather\td08\td01\n", encoding="utf-8")

    triplets, errors = read_triplets(str(path))

    assert errors == []
    assert triplets == [Triplet("2", "car for sale", "d01", "d08"), Triplet("q9", "weather", "d08", "d01")]


# --- text scores ---


def test_read_text_scores(tmp_path: Path) -> None:
    path = tmp_path / "scores.tsv"
    path.write_text("q\tdoc a\t1.5\nq\tdoc b\tx\nq\tdoc a\t2\n", encoding="utf-8")

    scores, errors = read_text_scores(str(path))

    assert scores == {("q", "doc a"): 1.5}
    assert len(errors) == 2
    assert "not a valid score" in errors[0].description
    assert "duplicate" in errors[1].description

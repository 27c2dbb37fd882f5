"""Identical invocations produce byte-identical outputs, whatever the thread count."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from rtk.application.configuration import CONFIG_ENV_VAR
from rtk.application.orchestration import EXIT_OK, dispatch
from rtk.domain.attention import SPECIAL_TOKEN, AttentionTensor
from rtk.infrastructure.attention_io import save_attention
from rtk.infrastructure.file_util import write_tsv

from .synthetic_corpus import N_TOPICS, SyntheticCorpus, build_synthetic_corpus


@pytest.fixture(autouse=True)
def _isolated(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)


def _rtk(*args: str) -> None:
    assert dispatch([*args, "-v", "0", "--seed", "13"]) == EXIT_OK, args


def _outputs_for_threads(command: list[str], out: Path, threads: list[str]) -> list[bytes]:
    outputs = []
    for i, n in enumerate(threads):
        path = out.with_name(f"{out.stem}.{i}{out.suffix}")
        _rtk(*command, "--out", str(path), "--threads", n)
        outputs.append(path.read_bytes())
    return outputs


@pytest.fixture
def synthetic(tmp_path: Path) -> SyntheticCorpus:
    return build_synthetic_corpus(tmp_path)


@pytest.fixture
def index_path(tmp_path: Path, synthetic: SyntheticCorpus) -> str:
    out = str(tmp_path / "synthetic.idx")
    _rtk("index", "build", "--corpus", str(synthetic.corpus), "--out", out)
    return out


def _attention_files(directory: Path, count: int) -> list[str]:
    rng = np.random.default_rng(5)
    paths = []
    for i in range(count):
        q_len, d_len = 3, 12
        word_ids = np.array([SPECIAL_TOKEN, 0, 1, 2, SPECIAL_TOKEN, *range(d_len), SPECIAL_TOKEN], dtype=np.int64)
        seq_len = len(word_ids)
        raw = rng.random((2, 2, seq_len, seq_len)) + 1e-3
        tensor = AttentionTensor(raw / raw.sum(axis=-1, keepdims=True), word_ids, q_len, d_len)
        path = directory / f"attn{i}.bin"
        save_attention(tensor, str(path))
        paths.append(str(path))
    return paths


# --- index ---


def test_index_build_is_byte_stable(tmp_path: Path, synthetic: SyntheticCorpus, index_path: str) -> None:
    again = tmp_path / "again.idx"
    _rtk("index", "build", "--corpus", str(synthetic.corpus), "--out", str(again))

    assert Path(index_path).read_bytes() == again.read_bytes()


# --- commands across thread counts ---


def test_search_ignores_thread_count(tmp_path: Path, synthetic: SyntheticCorpus, index_path: str) -> None:
    command = [
        "search", "--index", index_path, "--scorer", "bm25t", "--thesaurus", str(synthetic.thesaurus),
        "--queries", str(synthetic.queries), "--full-scan",
    ]  # fmt: skip

    outputs = _outputs_for_threads(command, tmp_path / "run.trec", ["1", "1", "8"])

    assert outputs[0]
    assert outputs[0] == outputs[1] == outputs[2]


def test_align_extract_ignores_thread_count(tmp_path: Path) -> None:
    command = ["align", "extract", "--attn", *_attention_files(tmp_path, 6)]

    outputs = _outputs_for_threads(command, tmp_path / "segments.jsonl", ["1", "1", "8"])

    assert len(outputs[0].splitlines()) == 6
    assert outputs[0] == outputs[1] == outputs[2]


def test_phase2_records_repeat(tmp_path: Path, synthetic: SyntheticCorpus, index_path: str) -> None:
    triplets = tmp_path / "triplets.tsv"
    write_tsv(
        str(triplets),
        [(f"q{t:02d}", f"quest{t} topic{t}", f"rel{t:02d}", f"dis{t:02d}0") for t in range(N_TOPICS)],
    )
    thesaurus = tmp_path / "pairs_thesaurus.tsv"
    write_tsv(
        str(thesaurus),
        [row for t in range(N_TOPICS) for row in ((f"quest{t}", f"syn{t}", 0.9), (f"quest{t}", f"topic{t}", 0.4))],
    )
    command = [
        "traindata", "phase2", "--index", index_path, "--triplets", str(triplets), "--thesaurus", str(thesaurus),
    ]  # fmt: skip

    outputs = _outputs_for_threads(command, tmp_path / "phase2.jsonl", ["1", "8"])

    assert len(outputs[0].splitlines()) == N_TOPICS
    assert outputs[0] == outputs[1]


def test_reports_ignore_thread_count(tmp_path: Path, synthetic: SyntheticCorpus, index_path: str) -> None:
    run = tmp_path / "bm25.trec"
    _rtk("search", "--index", index_path, "--scorer", "bm25", "--queries", str(synthetic.queries), "--out", str(run))
    command = ["eval", "effectiveness", "--run", str(run), "--qrels", str(synthetic.qrels)]

    outputs = _outputs_for_threads(command, tmp_path / "eval.tsv", ["1", "8"])

    assert outputs[0] == outputs[1]

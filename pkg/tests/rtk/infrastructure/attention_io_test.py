from __future__ import annotations

from pathlib import Path

import numpy as np

from rtk.domain.attention import SPECIAL_TOKEN, AttentionTensor
from rtk.infrastructure.attention_io import MAGIC, decode_attention, encode_attention, load_attention, save_attention


def _tensor() -> AttentionTensor:
    rng = np.random.default_rng(7)
    raw = rng.random((2, 3, 6, 6))
    values = (raw / raw.sum(axis=-1, keepdims=True)).astype(np.float32).astype(np.float64)
    word_ids = np.array([SPECIAL_TOKEN, 0, 1, SPECIAL_TOKEN, 0, SPECIAL_TOKEN])
    return AttentionTensor(values=values, word_ids=word_ids, q_len=2, d_len=1)


def test_save_then_load(tmp_path: Path) -> None:
    tensor = _tensor()
    path = tmp_path / "t.attn"

    save_attention(tensor, str(path))
    loaded, errors = load_attention(str(path))

    assert errors == []
    assert loaded is not None
    assert (loaded.n_layers, loaded.n_heads, loaded.seq_len) == (2, 3, 6)
    assert (loaded.q_len, loaded.d_len) == (2, 1)
    np.testing.assert_array_equal(loaded.word_ids, tensor.word_ids)
    np.testing.assert_array_equal(loaded.values, tensor.values)


def test_file_size_matches_layout() -> None:
    data = encode_attention(_tensor())

    assert len(data) == len(MAGIC) + 20 + 6 * 4 + 2 * 3 * 6 * 6 * 4


# --- malformed ---


def test_bad_magic() -> None:
    tensor, errors = decode_attention(b"XXXXX" + encode_attention(_tensor())[5:])

    assert tensor is None
    assert "bad magic" in errors[0].description


def test_truncated_values() -> None:
    tensor, errors = decode_attention(encode_attention(_tensor())[:-4])

    assert tensor is None
    assert "truncated" in errors[0].description


def test_trailing_bytes() -> None:
    tensor, errors = decode_attention(encode_attention(_tensor()) + b"\x00\x00")

    assert tensor is None
    assert "2 unexpected trailing bytes" in errors[0].description


def test_zero_dimensions() -> None:
    tensor, errors = decode_attention(MAGIC + bytes(20))

    assert tensor is None
    assert "invalid dimensions" in errors[0].description

"""Attention tensor codec.

    magic "ATTN1", u32 L, M, H, q_len, d_len, L x i32 word ids (-1 special),
    M*H*L*L x f32 values in [layer][head][i][j] row-major order; little-endian.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from rtk.domain.attention import AttentionTensor
from rtk.domain.status_level import Status, error

from .infrastructure_resources import str_resources

MAGIC = b"ATTN1"

_DIMS = struct.Struct("<5I")
_WORD_DTYPE = np.dtype("<i4")
_VALUE_DTYPE = np.dtype("<f4")


def encode_attention(tensor: AttentionTensor) -> bytes:
    dims = _DIMS.pack(tensor.seq_len, tensor.n_layers, tensor.n_heads, tensor.q_len, tensor.d_len)
    return (
        MAGIC
        + dims
        + np.asarray(tensor.word_ids, dtype=_WORD_DTYPE).tobytes()
        + np.ascontiguousarray(tensor.values, dtype=_VALUE_DTYPE).tobytes()
    )


def save_attention(tensor: AttentionTensor, path: str) -> None:
    Path(path).write_bytes(encode_attention(tensor))


def decode_attention(data: bytes, path: str = "<memory>") -> tuple[AttentionTensor | None, list[Status]]:
    """Decode bytes into a tensor; content checks (row sums, layout) belong to alignment."""
    if data[: len(MAGIC)] != MAGIC:
        return None, [error(str_resources.err_attn_magic.format(path=path))]
    header_end = len(MAGIC) + _DIMS.size
    if len(data) < header_end:
        return None, [error(str_resources.err_attn_truncated.format(path=path, actual=len(data), expected=header_end))]

    seq_len, n_layers, n_heads, q_len, d_len = _DIMS.unpack_from(data, len(MAGIC))
    if seq_len == 0 or n_layers == 0 or n_heads == 0:
        return None, [error(str_resources.err_attn_dims.format(
            path=path, L=seq_len, M=n_layers, H=n_heads, q_len=q_len, d_len=d_len
        ))]

    words_end = header_end + seq_len * _WORD_DTYPE.itemsize
    expected = words_end + n_layers * n_heads * seq_len * seq_len * _VALUE_DTYPE.itemsize
    if len(data) < expected:
        return None, [error(str_resources.err_attn_truncated.format(path=path, actual=len(data), expected=expected))]
    if len(data) > expected:
        return None, [error(str_resources.err_attn_trailing.format(path=path, extra=len(data) - expected))]

    word_ids = np.frombuffer(data, dtype=_WORD_DTYPE, count=seq_len, offset=header_end).astype(np.int64)
    values = (
        np.frombuffer(data, dtype=_VALUE_DTYPE, offset=words_end)
        .reshape(n_layers, n_heads, seq_len, seq_len)
        .astype(np.float64)
    )
    return AttentionTensor(values=values, word_ids=word_ids, q_len=q_len, d_len=d_len), []


def load_attention(path: str) -> tuple[AttentionTensor | None, list[Status]]:
    file_path = Path(path)
    if not file_path.is_file():
        return None, [error(str_resources.err_file_missing.format(path=path))]
    return decode_attention(file_path.read_bytes(), path)

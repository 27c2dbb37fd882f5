"""Single-file index persistence.

Layout (little-endian):

    magic    b"RTKIDX1"
    u32      format version
    u64      payload length
    payload  u32 header length, JSON header (analyzer config, counts)
             per document: u32 id length, id bytes, u32 document length
             per term: u32 term length, term bytes, u32 posting count,
                       posting count x (u32 document index, u32 tf)
    u32      CRC32 of the payload
"""

from __future__ import annotations

import json
import struct
import zlib
from pathlib import Path

import numpy as np

from rtk.domain.analyzer_config import AnalyzerConfig
from rtk.domain.corpus_index import CorpusIndex, Posting
from rtk.domain.status_level import Status, error

from .infrastructure_resources import str_resources

MAGIC = b"RTKIDX1"
FORMAT_VERSION = 1

_U32 = struct.Struct("<I")
_PREAMBLE = struct.Struct("<IQ")
_POSTING_DTYPE = np.dtype("<u4")


def _pack_str(text: str) -> bytes:
    raw = text.encode("utf-8")
    return _U32.pack(len(raw)) + raw


def encode_index(index: CorpusIndex) -> bytes:
    header = {
        "analyzer": index.analyzer.to_dict(),
        "n_docs": index.n_docs,
        "n_terms": len(index.postings),
        "total_tokens": index.total_tokens,
        "avgdl": index.avgdl,
    }
    header_bytes = json.dumps(header, sort_keys=True).encode("utf-8")
    parts = [_U32.pack(len(header_bytes)), header_bytes]

    doc_index: dict[str, int] = {}
    for position, (doc_id, length) in enumerate(index.doc_len.items()):
        doc_index[doc_id] = position
        parts.append(_pack_str(doc_id))
        parts.append(_U32.pack(length))

    for term, plist in index.postings.items():
        parts.append(_pack_str(term))
        parts.append(_U32.pack(len(plist)))
        pairs = np.array([(doc_index[p.doc_id], p.tf) for p in plist], dtype=_POSTING_DTYPE)
        parts.append(pairs.tobytes())

    payload = b"".join(parts)
    return MAGIC + _PREAMBLE.pack(FORMAT_VERSION, len(payload)) + payload + _U32.pack(zlib.crc32(payload))


def save_index(index: CorpusIndex, path: str) -> int:
    data = encode_index(index)
    Path(path).write_bytes(data)
    return len(data)


class _Reader:
    def __init__(self, payload: bytes) -> None:
        self._data = memoryview(payload)
        self._offset = 0

    def u32(self) -> int:
        (value,) = _U32.unpack_from(self._data, self._offset)
        self._offset += _U32.size
        return int(value)

    def raw(self, size: int) -> bytes:
        end = self._offset + size
        if end > len(self._data):
            raise ValueError(f"read past end of payload at offset {self._offset}")
        chunk = bytes(self._data[self._offset : end])
        self._offset = end
        return chunk

    def text(self) -> str:
        return self.raw(self.u32()).decode("utf-8")

    @property
    def exhausted(self) -> bool:
        return self._offset == len(self._data)


def decode_index(data: bytes, path: str = "<memory>") -> tuple[CorpusIndex | None, list[Status]]:
    if len(data) < len(MAGIC) or data[: len(MAGIC)] != MAGIC:
        return None, [error(str_resources.err_index_magic.format(path=path))]

    preamble_end = len(MAGIC) + _PREAMBLE.size
    if len(data) < preamble_end:
        return None, [error(str_resources.err_index_truncated.format(
            path=path, actual=len(data), expected=preamble_end
        ))]
    version, payload_len = _PREAMBLE.unpack_from(data, len(MAGIC))
    if version != FORMAT_VERSION:
        return None, [error(str_resources.err_index_version.format(
            path=path, found=version, expected=FORMAT_VERSION
        ))]

    expected = preamble_end + payload_len + _U32.size
    if len(data) < expected:
        return None, [error(str_resources.err_index_truncated.format(path=path, actual=len(data), expected=expected))]

    payload = data[preamble_end : preamble_end + payload_len]
    (stored,) = _U32.unpack_from(data, preamble_end + payload_len)
    computed = zlib.crc32(payload)
    if stored != computed or len(data) != expected:
        return None, [error(str_resources.err_index_checksum.format(path=path, stored=stored, computed=computed))]

    try:
        return _decode_payload(payload), []
    except (ValueError, KeyError, IndexError, struct.error) as e:
        return None, [error(str_resources.err_index_corrupt.format(path=path, reason=e))]


def _decode_payload(payload: bytes) -> CorpusIndex:
    reader = _Reader(payload)
    header = json.loads(reader.raw(reader.u32()).decode("utf-8"))
    analyzer = AnalyzerConfig.from_dict(header["analyzer"])

    doc_ids: list[str] = []
    doc_len: dict[str, int] = {}
    for _ in range(int(header["n_docs"])):
        doc_id = reader.text()
        doc_ids.append(doc_id)
        doc_len[doc_id] = reader.u32()

    postings: dict[str, list[Posting]] = {}
    for _ in range(int(header["n_terms"])):
        term = reader.text()
        count = reader.u32()
        pairs = np.frombuffer(reader.raw(count * 2 * _POSTING_DTYPE.itemsize), dtype=_POSTING_DTYPE).reshape(-1, 2)
        postings[term] = [Posting(doc_ids[int(i)], int(tf)) for i, tf in pairs]

    if not reader.exhausted:
        raise ValueError("trailing bytes after postings")
    return CorpusIndex.from_postings(postings, doc_len, analyzer)


def load_index(path: str) -> tuple[CorpusIndex | None, list[Status]]:
    file_path = Path(path)
    if not file_path.is_file():
        return None, [error(str_resources.err_file_missing.format(path=path))]
    return decode_index(file_path.read_bytes(), path)

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

SPECIAL_TOKEN = -1


@dataclass(frozen=True, eq=False)
class AttentionTensor:
    """Attention probabilities of one [CLS] q [SEP] d [SEP] input.

    values has shape (M, H, L, L), indexed [layer][head][i][j]. word_ids maps
    each token position to its word index within its segment (query or
    document, both numbered from 0), or SPECIAL_TOKEN.
    """

    values: npt.NDArray[np.float64]
    word_ids: npt.NDArray[np.int64]
    q_len: int
    d_len: int

    @property
    def n_layers(self) -> int:
        return int(self.values.shape[0])

    @property
    def n_heads(self) -> int:
        return int(self.values.shape[1])

    @property
    def seq_len(self) -> int:
        return int(self.values.shape[-1])


@dataclass(frozen=True, eq=False)
class AffinityMatrix:
    """Query-word x document-word attention affinity."""

    scores: npt.NDArray[np.float64]

    @property
    def n_query_words(self) -> int:
        return int(self.scores.shape[0])

    @property
    def n_doc_words(self) -> int:
        return int(self.scores.shape[1])

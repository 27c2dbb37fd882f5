from __future__ import annotations

from dataclasses import dataclass

from .domain_resources import str_resources

DEFAULT_K1 = 0.9
DEFAULT_B = 0.4
# tuned value is not reported for short passages; 2500 is the usual starting point
DEFAULT_MU = 2500.0


@dataclass(frozen=True)
class Bm25Params:
    k1: float = DEFAULT_K1
    b: float = DEFAULT_B

    def __post_init__(self) -> None:
        if self.k1 < 0:
            raise ValueError(str_resources.err_bm25_k1.format(k1=self.k1))
        if not 0.0 <= self.b <= 1.0:
            raise ValueError(str_resources.err_bm25_b.format(b=self.b))


@dataclass(frozen=True)
class QlParams:
    mu: float = DEFAULT_MU
    # divide each translation row by its mass (identity weight included)
    qlt_normalize: bool = False

    def __post_init__(self) -> None:
        if self.mu <= 0:
            raise ValueError(str_resources.err_ql_mu.format(mu=self.mu))

from __future__ import annotations

import math
from collections.abc import Sequence
from typing import NamedTuple

import numpy as np
from scipy.special import betainc

from rtk.domain.errors import RtkError

from .evaluation_resources import str_resources


class TTestResult(NamedTuple):
    t: float
    df: int
    p_value: float
    mean_delta: float


def paired_t_test(a: Sequence[float], b: Sequence[float]) -> TTestResult:
    """Two-sided Student's paired t-test on a - b.

    p = I_{df / (df + t^2)}(df / 2, 1 / 2). With zero spread the test is
    degenerate: p is 1 for a zero mean delta and 0 otherwise.
    """
    if len(a) != len(b):
        raise RtkError(str_resources.err_t_test_lengths.format(a=len(a), b=len(b)))
    deltas = np.asarray(a, dtype=np.float64) - np.asarray(b, dtype=np.float64)
    n = len(deltas)
    if n < 2:
        raise RtkError(str_resources.err_t_test_size.format(n=n))
    df = n - 1
    mean = float(deltas.mean())
    sd = float(deltas.std(ddof=1))
    if sd == 0.0:
        if mean == 0.0:
            return TTestResult(0.0, df, 1.0, 0.0)
        return TTestResult(math.copysign(math.inf, mean), df, 0.0, mean)
    t = mean / (sd / math.sqrt(n))
    p = float(betainc(df / 2.0, 0.5, df / (df + t * t)))
    return TTestResult(t, df, p, mean)

"""Independent reference computations for self-checks and tests.

Nothing here is used by the production code paths; the point is to have
implementations that share no logic with the closed forms they verify.
"""

from __future__ import annotations

import math

import numpy as np


def expm_taylor(a: np.ndarray, terms: int = 12) -> np.ndarray:
    """Matrix exponential by scaling-and-squaring over a truncated series.

    Scales ``a`` by 2**k until its 1-norm is below 1/2, sums ``terms``
    Taylor terms, then squares k times. Plenty for the 2x2 generators
    used here (series truncation error ~ (1/2)^13 / 13! before squaring).
    """
    a = np.asarray(a, dtype=complex)
    norm1 = float(np.abs(a).sum(axis=0).max())
    k = max(0, int(math.ceil(math.log2(max(norm1, 1e-300) / 0.5)))) if norm1 > 0.5 else 0
    b = a / (2.0**k)
    x = np.eye(a.shape[0], dtype=complex)
    term = np.eye(a.shape[0], dtype=complex)
    for j in range(1, terms + 1):
        term = term @ b / j
        x = x + term
    for _ in range(k):
        x = x @ x
    return x

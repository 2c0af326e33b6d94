"""Deterministic pairwise reductions for quadrature sums.

Every integral in the package is a mean over grid samples.  Summing in
a fixed binary tree makes the result independent of how the evaluation
work was chunked or threaded, and keeps rounding error at the
O(log n) level of pairwise summation.
"""

from __future__ import annotations

import numpy as np


def pairwise_sum(values) -> float:
    """Sum a 1-d array by halving: v <- v[0::2] + v[1::2] until scalar.

    Zero-padding to a power of two does not change the sum, so the
    reduction tree depends only on the length of the input.
    """
    v = np.asarray(values, dtype=np.float64)
    if v.ndim != 1:
        raise ValueError("pairwise_sum expects a 1-d array")
    n = v.size
    if n == 0:
        return 0.0
    size = 1 << (n - 1).bit_length()
    if size != n:
        v = np.concatenate([v, np.zeros(size - n)])
    else:
        v = v.copy()
    while v.size > 1:
        v = v[0::2] + v[1::2]
    return float(v[0])


def pairwise_mean(values) -> float:
    v = np.asarray(values, dtype=np.float64)
    if v.size == 0:
        raise ValueError("mean of empty sample set")
    return pairwise_sum(v) / v.size


def combine_partials(parts) -> float:
    """Pairwise-combine per-chunk partial sums, in chunk index order."""
    return pairwise_sum(np.asarray(list(parts), dtype=np.float64))

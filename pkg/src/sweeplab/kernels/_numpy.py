"""Vectorised numpy versions of the batch kernels.

A batch is a 2-D integer array: one row per word, one column per step,
entries are letter codes that index the weight vector.
"""

import numpy as np

NAME = "numpy"


def levels_batch(codes, weights):
    return np.cumsum(weights[codes], axis=1, dtype=np.int64)


def _order(codes, weights, plus):
    rows, n = codes.shape
    if n == 0:
        return np.zeros((rows, 0), dtype=np.int64)
    lv = levels_batch(codes, weights)
    # minus: classes -1, -2, ..., min, then max, ..., 0; right to left
    # plus:  classes 0, -1, ..., min, then max, ..., 1; left to right
    late = lv > 0 if plus else lv >= 0
    span = int(np.abs(lv).max()) + 1
    idx = np.arange(n, dtype=np.int64)
    within = idx if plus else (n - 1 - idx)
    key = (late.astype(np.int64) * (2 * span + 1) + (span - lv)) * n + within
    return np.argsort(key, axis=1, kind="stable")


def sweep_batch(codes, weights, plus=False):
    return np.take_along_axis(codes, _order(codes, weights, plus), axis=1)


def area_batch(codes):
    """Pairs i < j with code 0 (E) before code 1 (N)."""
    east_before = np.cumsum(codes == 0, axis=1) - (codes == 0)
    return np.where(codes == 1, east_before, 0).sum(axis=1)


def min_level_batch(codes, weights):
    lv = levels_batch(codes, weights)
    if lv.shape[1] == 0:
        return np.zeros(lv.shape[0], dtype=np.int64)
    return np.minimum(lv.min(axis=1), 0)

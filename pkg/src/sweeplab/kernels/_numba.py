"""numba-compiled batch kernels; same contracts as the numpy versions."""

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def _sweep_rows(codes, weights, plus, out):
    rows, n = codes.shape
    lv = np.empty(n, dtype=np.int64)
    key = np.empty(n, dtype=np.int64)
    for r in range(rows):
        acc = 0
        lo = 0
        hi = 0
        for i in range(n):
            acc += weights[codes[r, i]]
            lv[i] = acc
            if acc < lo:
                lo = acc
            if acc > hi:
                hi = acc
        span = max(hi, -lo) + 1
        for i in range(n):
            late = 1 if (lv[i] > 0 if plus else lv[i] >= 0) else 0
            within = i if plus else n - 1 - i
            key[i] = (late * (2 * span + 1) + (span - lv[i])) * n + within
        order = np.argsort(key)
        for i in range(n):
            out[r, i] = codes[r, order[i]]


def sweep_batch(codes, weights, plus=False):
    out = np.empty_like(codes)
    if codes.shape[1]:
        _sweep_rows(codes, weights.astype(np.int64), plus, out)
    return out


@njit(cache=True)
def _area_rows(codes, out):
    rows, n = codes.shape
    for r in range(rows):
        east = 0
        total = 0
        for i in range(n):
            if codes[r, i] == 0:
                east += 1
            elif codes[r, i] == 1:
                total += east
        out[r] = total


def area_batch(codes):
    out = np.empty(codes.shape[0], dtype=np.int64)
    _area_rows(codes, out)
    return out


@njit(cache=True)
def _min_level_rows(codes, weights, out):
    rows, n = codes.shape
    for r in range(rows):
        acc = 0
        lo = 0
        for i in range(n):
            acc += weights[codes[r, i]]
            if acc < lo:
                lo = acc
        out[r] = lo


def min_level_batch(codes, weights):
    out = np.empty(codes.shape[0], dtype=np.int64)
    _min_level_rows(codes, weights.astype(np.int64), out)
    return out


@njit(cache=True)
def _levels_rows(codes, weights, out):
    rows, n = codes.shape
    for r in range(rows):
        acc = 0
        for i in range(n):
            acc += weights[codes[r, i]]
            out[r, i] = acc


def levels_batch(codes, weights):
    out = np.empty(codes.shape, dtype=np.int64)
    _levels_rows(codes, weights.astype(np.int64), out)
    return out

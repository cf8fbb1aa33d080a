"""Batch kernels for exhaustive campaigns.

The backend is chosen once, at import time, from ``SWEEPLAB_BACKEND``
(``numba`` or ``numpy``).  Without the variable numba is used when it
imports and numpy otherwise.  Both backends give identical results; the
pure-Python functions in :mod:`sweeplab.sweeps` remain the reference.
"""

from __future__ import annotations

import os
from typing import Iterable, Sequence

import numpy as np

from . import _numpy

BACKENDS = ("numba", "numpy")


def _load(name: str | None):
    if name is None:
        try:
            from . import _numba
        except ImportError:
            return _numpy
        return _numba
    if name == "numpy":
        return _numpy
    if name == "numba":
        from . import _numba
        return _numba
    raise ValueError(f"SWEEPLAB_BACKEND must be one of {BACKENDS}, got {name!r}")


backend = _load(os.environ.get("SWEEPLAB_BACKEND") or None)


def get_backend(name: str | None = None):
    """The active backend module, or the named one."""
    return backend if name is None else _load(name)


def encode(words: Sequence[str], alphabet: str) -> np.ndarray:
    """Rows of letter codes: ``alphabet.index(letter)``.  Words must share a length."""
    n = len(words[0]) if words else 0
    table = np.full(256, -1, dtype=np.int16)
    for code, letter in enumerate(alphabet):
        table[ord(letter)] = code
    raw = np.frombuffer("".join(words).encode("ascii"), dtype=np.uint8)
    if raw.size != n * len(words):
        raise ValueError("words in a batch must have equal length")
    codes = table[raw]
    if (codes < 0).any():
        raise ValueError(f"letter outside alphabet {alphabet!r}")
    return codes.astype(np.int8).reshape(len(words), n)


def decode(codes: np.ndarray, alphabet: str) -> list[str]:
    letters = np.frombuffer(alphabet.encode("ascii"), dtype=np.uint8)
    rows = letters[codes]
    return [row.tobytes().decode("ascii") for row in rows]


def _key_fits(n: int, weights: np.ndarray) -> bool:
    span = int(np.abs(weights).max(initial=0)) * n + 1
    return (2 * span + 1) * 2 * (n + 1) < 2**62


def sweep_batch(codes: np.ndarray, weights: Iterable[int], plus: bool = False, impl=None) -> np.ndarray:
    """``sweep_minus`` (or ``sweep_plus``) applied to every row."""
    w = np.asarray(list(weights), dtype=np.int64)
    if not _key_fits(codes.shape[1], w):
        raise OverflowError("weights too large for the batch kernels")
    return (impl or backend).sweep_batch(codes, w, plus)


def area_batch(codes: np.ndarray, impl=None) -> np.ndarray:
    """``area`` of each row of an E=0 / N=1 batch."""
    return (impl or backend).area_batch(codes)


def min_level_batch(codes: np.ndarray, weights: Iterable[int], impl=None) -> np.ndarray:
    """``ml``: minimum of l_0 = 0, l_1, ..., l_n for each row."""
    return (impl or backend).min_level_batch(codes, np.asarray(list(weights), dtype=np.int64))


def pack_rows(codes: np.ndarray, radix: int) -> np.ndarray:
    """One integer per row (base ``radix``); rows of equal length compare like their keys."""
    n = codes.shape[1]
    if radix ** max(n, 1) >= 2**63:
        raise OverflowError("rows too long to pack into int64")
    powers = radix ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return codes.astype(np.int64) @ powers


def first_collision(images: np.ndarray, radix: int) -> tuple[int, int] | None:
    """Indices of two rows with equal images, or None when all rows differ."""
    packed = pack_rows(images, radix)
    order = np.argsort(packed, kind="stable")
    same = np.nonzero(packed[order][1:] == packed[order][:-1])[0]
    if same.size == 0:
        return None
    k = int(same[0])
    i, j = sorted((int(order[k]), int(order[k + 1])))
    return i, j

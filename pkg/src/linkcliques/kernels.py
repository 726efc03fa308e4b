"""Interval sweep kernels shared by stream simplification and the Δ transform.

Both kernels take flat arrays sorted by ``(pair, begin)`` and merge every run of
closed intervals of the same pair that intersect (touching endpoints included)
into their union.  The numba kernel is a single linear pass; the numpy kernel
is loop-free and used when numba is missing or disabled.
"""

from __future__ import annotations

import numpy as np

from ._accel import USE_NUMBA, njit

__all__ = [
    "merge_segments",
    "merge_segments_numba",
    "merge_segments_numpy",
    "active_backend",
]


@njit(cache=True)
def _merge_loop(pairs, begins, ends):
    n = pairs.shape[0]
    out_p = np.empty(n, dtype=np.int64)
    out_b = np.empty(n, dtype=np.int64)
    out_e = np.empty(n, dtype=np.int64)
    k = -1
    for i in range(n):
        if k < 0 or pairs[i] != out_p[k] or begins[i] > out_e[k]:
            k += 1
            out_p[k] = pairs[i]
            out_b[k] = begins[i]
            out_e[k] = ends[i]
        elif ends[i] > out_e[k]:
            out_e[k] = ends[i]
    return out_p[: k + 1], out_b[: k + 1], out_e[: k + 1]


def merge_segments_numba(pairs, begins, ends):
    pairs, begins, ends = _as_int64(pairs, begins, ends)
    if pairs.shape[0] == 0:
        return pairs.copy(), begins.copy(), ends.copy()
    return _merge_loop(pairs, begins, ends)


def merge_segments_numpy(pairs, begins, ends):
    pairs, begins, ends = _as_int64(pairs, begins, ends)
    n = pairs.shape[0]
    if n == 0:
        return pairs.copy(), begins.copy(), ends.copy()
    # Running max of ends must restart at every pair boundary.  Replace times
    # by their rank and offset each pair block by (block index * K) so a plain
    # cumulative max over the whole array never leaks across blocks.
    values, inverse = np.unique(np.concatenate([begins, ends]), return_inverse=True)
    rank_b = inverse[:n].astype(np.int64)
    rank_e = inverse[n:].astype(np.int64)
    _, block = np.unique(pairs, return_inverse=True)
    block = block.astype(np.int64)
    width = np.int64(values.shape[0] + 1)
    key_e = block * width + rank_e
    running = np.maximum.accumulate(key_e)

    start = np.ones(n, dtype=bool)
    start[1:] = (block[1:] != block[:-1]) | (block[1:] * width + rank_b[1:] > running[:-1])
    first = np.flatnonzero(start)
    last = np.append(first[1:] - 1, n - 1)
    merged_end = values[running[last] - block[last] * width]
    return pairs[first], begins[first], merged_end.astype(np.int64)


def active_backend():
    return "numba" if USE_NUMBA else "numpy"


def merge_segments(pairs, begins, ends):
    """Merge intersecting closed intervals per pair.

    Inputs must be sorted by pair, then by begin.  Returns three int64 arrays
    ``(pairs, begins, ends)`` in the same order with, per pair, strictly
    disjoint intervals (``end < next begin``).
    """
    if USE_NUMBA:
        return merge_segments_numba(pairs, begins, ends)
    return merge_segments_numpy(pairs, begins, ends)


def _as_int64(*arrays):
    return tuple(np.ascontiguousarray(a, dtype=np.int64) for a in arrays)

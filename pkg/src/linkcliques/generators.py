"""Seeded random streams for tests and benchmarks."""

from __future__ import annotations

import numpy as np

from .delta import build_instant_stream
from .stream import Interval, build_stream

__all__ = ["random_records", "generate_random_stream"]


def random_records(kind, n, m, horizon, seed, max_duration=None):
    """Raw records: pairs uniform over unordered pairs, times uniform over the horizon.

    Duration links get ``end = begin + uniform(0, max_duration)`` clipped to the
    horizon; ``max_duration`` defaults to a tenth of the horizon span.
    """
    if kind not in ("duration", "instant"):
        raise ValueError(f"unknown stream kind {kind!r}")
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 and m >= 1")
    horizon = Interval(*horizon)
    rng = np.random.default_rng(seed)
    width = len(str(n - 1))
    labels = [f"n{i:0{width}d}" for i in range(n)]

    u = rng.integers(0, n, size=m)
    v = (u + rng.integers(1, n, size=m)) % n
    starts = rng.integers(horizon.begin, horizon.end + 1, size=m)
    if kind == "instant":
        return [(int(t), labels[a], labels[b]) for t, a, b in zip(starts, u, v)]
    if max_duration is None:
        max_duration = max(1, (horizon.end - horizon.begin) // 10)
    ends = np.minimum(starts + rng.integers(0, max_duration + 1, size=m), horizon.end)
    return [(int(b), int(e), labels[x], labels[y]) for b, e, x, y in zip(starts, ends, u, v)]


def generate_random_stream(kind, n, m, horizon, seed, max_duration=None):
    """A built stream; merging may leave fewer than ``m`` links (see ``.m``)."""
    records = random_records(kind, n, m, horizon, seed, max_duration)
    if kind == "instant":
        return build_instant_stream(records, horizon)
    return build_stream(records, horizon)

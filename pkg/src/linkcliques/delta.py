"""Instantaneous link streams and their reduction to streams with durations.

For a window length Δ, each event ``(t, u, v)`` is stretched to ``[t, t + Δ]``;
per pair these windows are unioned and clipped to ``[α + Δ, ω]``.  Pairs are
then linked at time ``t`` exactly when they had an event in ``[t - Δ, t]``.
Maximal Δ-cliques ``(X, [x, y])`` of the instantaneous stream are in one-to-one
correspondence with maximal cliques ``(X, [x + Δ, y])`` of the stretched one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .cliques import Clique, enumerate_maximal_cliques
from .kernels import merge_segments
from .stream import (
    INT64_MAX,
    Interval,
    LinkStream,
    StreamError,
    TimeOverflowError,
    check_time,
)

__all__ = [
    "InstantStream",
    "build_instant_stream",
    "check_delta",
    "pair_availability",
    "transform",
    "shift_clique",
    "enumerate_maximal_delta_cliques",
]


@dataclass(frozen=True, eq=False)
class InstantStream:
    """Timestamped contacts; ``pair_events[(u, v)]`` is strictly increasing."""

    horizon: Interval
    labels: tuple
    pair_events: dict
    event_count: int

    @property
    def n(self) -> int:
        return len({w for pair in self.pair_events for w in pair})

    @property
    def m(self) -> int:
        return self.event_count

    def events(self):
        """Yield ``(t, u, v)`` in canonical order (pair, then time)."""
        for (u, v), times in sorted(self.pair_events.items()):
            for t in times:
                yield t, u, v


def build_instant_stream(
    records: Iterable[Sequence],
    horizon: Optional[Sequence] = None,
    nodes: Iterable = (),
) -> InstantStream:
    """Build from ``(t, u_label, v_label)`` records; duplicate events are dropped."""
    rows = []
    for t, lu, lv in records:
        t = check_time(t)
        if lu == lv:
            raise StreamError(f"self-loop on node {lu!r} at {t}")
        rows.append((t, lu, lv))
    if horizon is None:
        horizon = Interval(min(r[0] for r in rows), max(r[0] for r in rows)) if rows else Interval(0, 0)
    else:
        horizon = Interval(*horizon)
        for t, lu, lv in rows:
            if not horizon.contains(t):
                raise StreamError(f"event ({t},{lu},{lv}) lies outside horizon {horizon}")

    labels = sorted({r[1] for r in rows} | {r[2] for r in rows} | set(nodes))
    ids = {label: i for i, label in enumerate(labels)}
    per_pair = {}
    for t, lu, lv in rows:
        u, v = ids[lu], ids[lv]
        key = (u, v) if u < v else (v, u)
        per_pair.setdefault(key, set()).add(t)
    pair_events = {key: tuple(sorted(ts)) for key, ts in sorted(per_pair.items())}
    return InstantStream(
        horizon=horizon,
        labels=tuple(labels),
        pair_events=pair_events,
        event_count=sum(len(ts) for ts in pair_events.values()),
    )


def check_delta(horizon: Interval, delta) -> int:
    delta = int(delta)
    if delta < 0 or delta > horizon.end - horizon.begin:
        raise StreamError(f"delta {delta} outside [0, {horizon.end - horizon.begin}]")
    return delta


def _stretch(times: np.ndarray, delta: int) -> np.ndarray:
    if times.size and int(times.max()) > INT64_MAX - delta:
        raise TimeOverflowError(f"event time + delta {delta} overflows a signed 64-bit integer")
    return times + np.int64(delta)


def pair_availability(events, delta) -> list:
    """Union of ``[t, t + Δ]`` over sorted events, as disjoint closed intervals."""
    delta = int(delta)
    if delta < 0:
        raise StreamError(f"negative delta {delta}")
    times = np.asarray(events, dtype=np.int64)
    if times.size > 1 and not np.all(times[1:] > times[:-1]):
        raise StreamError("events must be strictly increasing")
    ends = _stretch(times, delta)
    _, b, e = merge_segments(np.zeros_like(times), times, ends)
    return [Interval(lo, hi) for lo, hi in zip(b.tolist(), e.tolist())]


def transform(instant: InstantStream, delta) -> LinkStream:
    """The duration stream over ``[α + Δ, ω]`` seen through a Δ-wide sliding window."""
    delta = check_delta(instant.horizon, delta)
    horizon = Interval(instant.horizon.begin + delta, instant.horizon.end)
    keys = list(instant.pair_events)
    counts = np.fromiter((len(instant.pair_events[k]) for k in keys), dtype=np.int64, count=len(keys))
    times = np.fromiter(
        (t for k in keys for t in instant.pair_events[k]), dtype=np.int64, count=int(counts.sum())
    )
    pair_ids = np.repeat(np.arange(len(keys), dtype=np.int64), counts)

    pid, b, e = merge_segments(pair_ids, times, _stretch(times, delta))
    b = np.maximum(b, horizon.begin)
    e = np.minimum(e, horizon.end)
    keep = b <= e
    pid, b, e = pid[keep], b[keep], e[keep]

    key_arr = np.array(keys, dtype=np.int64).reshape(-1, 2)
    return LinkStream._from_arrays(
        horizon, instant.labels, key_arr[pid, 0], key_arr[pid, 1], b, e
    )


def shift_clique(c: Clique, delta, direction: str) -> Clique:
    """Map a clique between the instantaneous frame and the stretched frame.

    ``to_delta`` sends ``[x, y]`` to ``[x + Δ, y]``; ``to_stream`` inverts it.
    """
    delta = int(delta)
    if direction == "to_delta":
        begin = c.begin + delta
    elif direction == "to_stream":
        begin = c.begin - delta
    else:
        raise ValueError(f"unknown direction {direction!r}")
    if begin > c.end:
        raise StreamError(f"shifting {c} by {delta} ({direction}) gives an empty interval")
    return Clique(c.nodes, check_time(begin), c.end)


def enumerate_maximal_delta_cliques(instant: InstantStream, delta, order: str = "lifo") -> set:
    """Maximal Δ-cliques of ``instant``, with intervals in its own time frame."""
    stretched = transform(instant, delta)
    return {
        shift_clique(c, delta, "to_stream")
        for c in enumerate_maximal_cliques(stretched, order=order)
    }

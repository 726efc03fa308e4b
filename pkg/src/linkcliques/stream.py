"""Time intervals and simple undirected link streams with durations."""

from __future__ import annotations

import gc
from bisect import bisect_left, bisect_right
from contextlib import contextmanager
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from .kernels import merge_segments

__all__ = [
    "INT64_MIN",
    "INT64_MAX",
    "StreamError",
    "TimeOverflowError",
    "Interval",
    "LinkStream",
    "StreamStats",
    "build_stream",
    "covering_interval",
    "is_clique",
    "stream_stats",
    "check_time",
]

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class StreamError(ValueError):
    """Invalid stream input: self-loops, reversed intervals, out-of-horizon links."""


class TimeOverflowError(StreamError):
    pass


def check_time(t) -> int:
    t = int(t)
    if not INT64_MIN <= t <= INT64_MAX:
        raise TimeOverflowError(f"timestamp {t} does not fit in a signed 64-bit integer")
    return t


@contextmanager
def _gc_paused():
    # building the index allocates ~m small tuples that the cyclic GC would rescan
    enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if enabled:
            gc.enable()


class _IntervalBase(NamedTuple):
    begin: int
    end: int


class Interval(_IntervalBase):
    """Closed time interval ``[begin, end]``; zero length is allowed."""

    __slots__ = ()

    def __new__(cls, begin, end):
        begin, end = check_time(begin), check_time(end)
        if begin > end:
            raise StreamError(f"interval begin {begin} > end {end}")
        return super().__new__(cls, begin, end)

    def contains(self, t) -> bool:
        return self.begin <= t <= self.end

    def contains_interval(self, other) -> bool:
        return self.begin <= other[0] and other[1] <= self.end

    @property
    def length(self) -> int:
        return self.end - self.begin

    def __repr__(self):
        return f"[{self.begin},{self.end}]"


class StreamStats(NamedTuple):
    n: int
    m: int
    horizon: Interval
    pair_count: int
    total_link_duration: int
    isolated_nodes: int = 0


@dataclass(frozen=True, eq=False)
class LinkStream:
    """Simple undirected link stream with durations.

    Node ids are dense integers assigned in sorted label order, so id order is
    the canonical node order.  ``pair_index`` maps ``(u, v)`` with ``u < v`` to
    the pair's sorted, strictly disjoint intervals.  Instances are immutable
    after construction; build them with :func:`build_stream`.
    """

    horizon: Interval
    labels: tuple
    pair_index: dict
    node_count: int
    link_count: int
    _begins: dict = field(repr=False)
    _ends: dict = field(repr=False)
    _incident: tuple = field(repr=False)
    _incident_begins: tuple = field(repr=False)
    _max_duration: tuple = field(repr=False)

    @property
    def n(self) -> int:
        return self.node_count

    @property
    def m(self) -> int:
        return self.link_count

    @property
    def node_ids(self) -> dict:
        return {label: i for i, label in enumerate(self.labels)}

    def node_id(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def links(self):
        """Yield ``(begin, end, u, v)`` in canonical order (pair, then time)."""
        for (u, v), intervals in sorted(self.pair_index.items()):
            for iv in intervals:
                yield iv.begin, iv.end, u, v

    def labelled_links(self):
        for b, e, u, v in self.links():
            yield b, e, self.labels[u], self.labels[v]

    def active_neighbours(self, u, x, y):
        """Nodes ``w`` such that some link of ``(u, w)`` contains ``[x, y]``."""
        begins = self._incident_begins[u]
        if not begins:
            return []
        lo = bisect_left(begins, x - self._max_duration[u])
        hi = bisect_right(begins, x)
        return [w for _, e, w in self._incident[u][lo:hi] if e >= y]

    @classmethod
    @_gc_paused()
    def _from_arrays(cls, horizon, labels, pair_u, pair_v, begins, ends):
        """Assemble a stream from merged arrays sorted by (u, v, begin)."""
        num_labels = len(labels)
        pair_index, pb, pe = {}, {}, {}
        incident = [[] for _ in range(num_labels)]
        for u, v, b, e in zip(pair_u.tolist(), pair_v.tolist(), begins.tolist(), ends.tolist()):
            key = (u, v)
            if key not in pair_index:
                pair_index[key], pb[key], pe[key] = [], [], []
            pair_index[key].append(Interval(b, e))
            pb[key].append(b)
            pe[key].append(e)
            incident[u].append((b, e, v))
            incident[v].append((b, e, u))
        for key in pair_index:
            pair_index[key] = tuple(pair_index[key])
        for lst in incident:
            lst.sort()
        active = {u for u, v in pair_index} | {v for u, v in pair_index}
        return cls(
            horizon=horizon,
            labels=tuple(labels),
            pair_index=pair_index,
            node_count=len(active),
            link_count=len(begins),
            _begins=pb,
            _ends=pe,
            _incident=tuple(incident),
            _incident_begins=tuple([b for b, _, _ in lst] for lst in incident),
            _max_duration=tuple(max((e - b for b, e, _ in lst), default=0) for lst in incident),
        )


def build_stream(
    raw_links: Iterable[Sequence],
    horizon: Optional[Sequence] = None,
    nodes: Iterable = (),
) -> LinkStream:
    """Build a simple link stream from ``(begin, end, u_label, v_label)`` tuples.

    Per pair, intervals that intersect (sharing a single endpoint counts) are
    replaced by their union.  ``horizon`` defaults to ``[min begin, max end]``
    (``[0, 0]`` for an empty stream).  ``nodes`` may declare extra, possibly
    isolated, node labels.
    """
    rows = []
    for rec in raw_links:
        b, e, lu, lv = rec
        b, e = check_time(b), check_time(e)
        if b > e:
            raise StreamError(f"link ({b},{e},{lu},{lv}) has begin > end")
        if lu == lv:
            raise StreamError(f"self-loop on node {lu!r} at [{b},{e}]")
        rows.append((b, e, lu, lv))

    if horizon is None:
        if rows:
            horizon = Interval(min(r[0] for r in rows), max(r[1] for r in rows))
        else:
            horizon = Interval(0, 0)
    else:
        horizon = Interval(*horizon)
        for b, e, lu, lv in rows:
            if b < horizon.begin or e > horizon.end:
                raise StreamError(f"link ({b},{e},{lu},{lv}) lies outside horizon {horizon}")

    labels = sorted({r[2] for r in rows} | {r[3] for r in rows} | set(nodes))
    ids = {label: i for i, label in enumerate(labels)}
    if not rows:
        empty = np.empty(0, dtype=np.int64)
        return LinkStream._from_arrays(horizon, labels, empty, empty, empty, empty)

    u = np.fromiter((ids[r[2]] for r in rows), dtype=np.int64, count=len(rows))
    v = np.fromiter((ids[r[3]] for r in rows), dtype=np.int64, count=len(rows))
    lo, hi = np.minimum(u, v), np.maximum(u, v)
    begins = np.fromiter((r[0] for r in rows), dtype=np.int64, count=len(rows))
    ends = np.fromiter((r[1] for r in rows), dtype=np.int64, count=len(rows))

    pair_key = lo * len(labels) + hi
    order = np.lexsort((ends, begins, pair_key))
    keys, mb, me = merge_segments(pair_key[order], begins[order], ends[order])
    return LinkStream._from_arrays(horizon, labels, keys // len(labels), keys % len(labels), mb, me)


def _pair(u, v):
    if u == v:
        raise StreamError(f"pair ({u}, {v}) is a self-loop")
    return (u, v) if u < v else (v, u)


def _cover_index(stream: LinkStream, key, x, y) -> int:
    begins = stream._begins.get(key)
    if begins is None:
        return -1
    i = bisect_right(begins, x) - 1
    if i >= 0 and stream._ends[key][i] >= y:
        return i
    return -1


def covering_interval(stream: LinkStream, u: int, v: int, q) -> Optional[Interval]:
    """The pair's unique indexed interval containing ``q``, or ``None``."""
    key = _pair(u, v)
    i = _cover_index(stream, key, q[0], q[1])
    return None if i < 0 else stream.pair_index[key][i]


def is_clique(stream: LinkStream, nodes, q) -> bool:
    """Whether every pair of ``nodes`` is continuously linked over ``q``."""
    x, y = q[0], q[1]
    for u, v in combinations(sorted(nodes), 2):
        if _cover_index(stream, (u, v), x, y) < 0:
            return False
    return True


def stream_stats(stream: LinkStream) -> StreamStats:
    total = sum(iv.end - iv.begin for ivs in stream.pair_index.values() for iv in ivs)
    return StreamStats(
        n=stream.node_count,
        m=stream.link_count,
        horizon=stream.horizon,
        pair_count=len(stream.pair_index),
        total_link_duration=total,
        isolated_nodes=len(stream.labels) - stream.node_count,
    )

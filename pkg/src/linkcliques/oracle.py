"""Exhaustive reference enumerators for small streams.

These work straight from the clique and Δ-clique definitions and share no code
with the fast path beyond the stream containers, so they serve as ground truth
in tests and in ``linkcliques check``.

Time is integral, but intervals are closed subsets of the real line.  For the
Δ-clique condition "every window ``[s, s + Δ]`` with ``x <= s <= y - Δ`` holds
an event", the set of events in a window only changes when ``s`` or ``s + Δ``
crosses an integer, so testing every integer and every half-integer ``s`` is
exact.  The Δ routines therefore work on a doubled time grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations

import numpy as np

from .cliques import Clique
from .delta import InstantStream
from .stream import LinkStream

__all__ = [
    "OracleLimits",
    "OracleLimitError",
    "oracle_maximal_cliques",
    "is_delta_clique",
    "oracle_maximal_delta_cliques",
]


@dataclass(frozen=True)
class OracleLimits:
    max_nodes: int = 12
    max_links: int = 64


class OracleLimitError(ValueError):
    pass


def _guard(n, m, limits):
    if n > limits.max_nodes or m > limits.max_links:
        raise OracleLimitError(
            f"oracle limited to n<={limits.max_nodes}, m<={limits.max_links}; got n={n}, m={m}"
        )


def _intersect(a, b):
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        lo = max(a[i][0], b[j][0])
        hi = min(a[i][1], b[j][1])
        if lo <= hi:
            out.append((lo, hi))
        if a[i][1] < b[j][1]:
            i += 1
        else:
            j += 1
    return out


def _time_sets(stream):
    """Map each node subset with nonempty common link time to its maximal intervals."""
    nodes = sorted({w for pair in stream.pair_index for w in pair})
    spans = {pair: [(iv.begin, iv.end) for iv in ivs] for pair, ivs in stream.pair_index.items()}
    found = {}
    for k in range(2, len(nodes) + 1):
        for X in combinations(nodes, k):
            pairs = list(combinations(X, 2))
            if any(p not in spans for p in pairs):
                continue
            common = reduce(_intersect, (spans[p] for p in pairs))
            if common:
                found[X] = common
    return found


def oracle_maximal_cliques(stream: LinkStream, limits: OracleLimits = OracleLimits()) -> set:
    _guard(stream.n, stream.m, limits)
    found = _time_sets(stream)
    out = set()
    for X, pieces in found.items():
        bigger = [found[Y] for Y in found if len(Y) > len(X) and set(X) < set(Y)]
        for x, y in pieces:
            dominated = any(lo <= x and y <= hi for other in bigger for lo, hi in other)
            if not dominated:
                out.add(Clique(X, x, y))
    return out


def is_delta_clique(instant: InstantStream, nodes, q, delta) -> bool:
    """Every pair of ``nodes`` meets in every Δ-long window inside ``q``.

    Windows are ``[s, s + Δ]`` for all real ``s`` in ``[x, y - Δ]``, checked on
    integer and half-integer ``s``.  When ``y - x < Δ`` there is no window and
    the answer is vacuously true.
    """
    x, y = q
    for pair in combinations(sorted(nodes), 2):
        times = instant.pair_events.get(pair, ())
        for s2 in range(2 * x, 2 * (y - delta) + 1):
            if not any(s2 <= 2 * t <= s2 + 2 * delta for t in times):
                return False
    return True


def _window_hits(times, grid, delta):
    if not len(times):
        return np.zeros(grid.shape, dtype=bool)
    t2 = 2 * np.asarray(times, dtype=np.int64)
    return ((t2[None, :] >= grid[:, None]) & (t2[None, :] <= grid[:, None] + 2 * delta)).any(axis=1)


def oracle_maximal_delta_cliques(
    instant: InstantStream,
    delta,
    limits: OracleLimits = OracleLimits(),
    exhaustive: bool = False,
) -> set:
    """Maximal Δ-cliques ``(X, [x, y])`` with ``y - x >= Δ``.

    Candidate endpoints are ``{t - Δ} ∪ {α}`` and ``{t + Δ} ∪ {ω}`` clipped to
    the horizon; ``exhaustive`` tries every integer endpoint instead.
    """
    delta = int(delta)
    _guard(instant.n, instant.m, limits)
    alpha, omega = instant.horizon
    grid = np.arange(2 * alpha, 2 * omega + 1, dtype=np.int64)

    if exhaustive:
        xs = ys = list(range(alpha, omega + 1))
    else:
        all_times = {t for times in instant.pair_events.values() for t in times}
        xs = sorted({t - delta for t in all_times if t - delta >= alpha} | {alpha})
        ys = sorted({t + delta for t in all_times if t + delta <= omega} | {omega})

    hits = {pair: _window_hits(times, grid, delta) for pair, times in instant.pair_events.items()}
    nodes = sorted({w for pair in instant.pair_events for w in pair})

    # misses[X][i] = number of grid points before i where some pair of X has an empty window
    misses = {}
    for k in range(2, len(nodes) + 1):
        for X in combinations(nodes, k):
            pairs = list(combinations(X, 2))
            if any(p not in hits for p in pairs):
                continue
            ok = np.logical_and.reduce([hits[p] for p in pairs])
            misses[X] = np.concatenate([[0], np.cumsum(~ok)])

    def holds(X, x2, y2):
        # windows start on grid points x2 .. y2 - 2Δ (doubled units)
        last = y2 - 2 * delta
        if last < x2:
            return True
        c = misses.get(X)
        if c is None:
            return False
        lo, hi = x2 - 2 * alpha, last - 2 * alpha
        return c[hi + 1] - c[lo] == 0

    out = set()
    for X in misses:
        extra = [v for v in nodes if v not in X]
        for x in xs:
            for y in ys:
                if y - x < delta:
                    continue
                x2, y2 = 2 * x, 2 * y
                if not holds(X, x2, y2):
                    continue
                if x > alpha and holds(X, x2 - 1, y2):
                    continue
                if y < omega and holds(X, x2, y2 + 1):
                    continue
                if any(holds(tuple(sorted(X + (v,))), x2, y2) for v in extra):
                    continue
                out.add(Clique(X, x, y))
    return out

"""Enumeration of maximal cliques in link streams with durations.

A candidate set ``S`` of cliques is seeded with one point clique
``({u, v}, [b, b])`` per link.  Each candidate popped from ``S`` is grown by one
node at a time and pushed to the right end of its time span; a seen set ``M``
prevents pushing the same candidate twice.  A candidate that can be grown in
neither way is maximal.  Growing to the left is never needed because every
candidate starts at the beginning of one of its links.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator, NamedTuple, Optional

from .stream import Interval, LinkStream, _cover_index

__all__ = [
    "Clique",
    "EnumState",
    "EnumerationError",
    "init_candidates",
    "node_extensions",
    "right_extension_bound",
    "enumerate_maximal_cliques",
    "iter_maximal_cliques",
]


class Clique(NamedTuple):
    """Node ids in increasing order plus a closed interval ``[begin, end]``."""

    nodes: tuple
    begin: int
    end: int

    @classmethod
    def of(cls, nodes, begin, end) -> "Clique":
        nodes = tuple(sorted(set(nodes)))
        if len(nodes) < 2:
            raise ValueError("a clique needs at least two nodes")
        Interval(begin, end)
        return cls(nodes, int(begin), int(end))

    @property
    def interval(self) -> Interval:
        return Interval(self.begin, self.end)

    def labelled(self, labels) -> tuple:
        return tuple(sorted(labels[u] for u in self.nodes)), self.begin, self.end


class EnumerationError(MemoryError):
    def __init__(self, emitted):
        super().__init__(f"ran out of memory after emitting {emitted} maximal cliques")
        self.emitted = emitted


@dataclass
class EnumState:
    """Work list ``S``, seen set ``M`` and result list ``R``."""

    S: deque = field(default_factory=deque)
    M: set = field(default_factory=set)
    R: list = field(default_factory=list)

    def push(self, c: Clique) -> bool:
        if c in self.M:
            return False
        self.M.add(c)
        self.S.append(c)
        return True


def init_candidates(stream: LinkStream) -> EnumState:
    state = EnumState()
    for b, _, u, v in stream.links():
        state.push(Clique((u, v), b, b))
    return state


def node_extensions(stream: LinkStream, c: Clique) -> list:
    """Cliques ``(X ∪ {v}, [x, y])`` for every valid ``v`` outside ``X``, by node id."""
    nodes, x, y = c
    first, rest = nodes[0], nodes[1:]
    out = []
    for v in sorted(stream.active_neighbours(first, x, y)):
        if v in nodes:
            continue
        for u in rest:
            key = (u, v) if u < v else (v, u)
            if _cover_index(stream, key, x, y) < 0:
                break
        else:
            out.append(Clique(tuple(sorted(nodes + (v,))), x, y))
    return out


def right_extension_bound(stream: LinkStream, c: Clique) -> int:
    """Smallest end among the links covering ``[x, y]`` for pairs of ``X``."""
    nodes, x, y = c
    bound = None
    for key in combinations(nodes, 2):
        i = _cover_index(stream, key, x, y)
        assert i >= 0, f"{c} is not a clique"
        e = stream._ends[key][i]
        if bound is None or e < bound:
            bound = e
    return bound


def _walk(stream: LinkStream, order: str = "lifo", check_node_maximality: bool = True):
    if order not in ("lifo", "fifo"):
        raise ValueError(f"unknown work-list order {order!r}")
    state = init_candidates(stream)
    S, push = state.S, state.push
    pop = S.pop if order == "lifo" else S.popleft
    emitted = 0
    try:
        while S:
            c = pop()
            extended = node_extensions(stream, c)
            for grown in extended:
                push(grown)
            is_max = not (extended and check_node_maximality)
            l = right_extension_bound(stream, c)
            if l != c.end:
                is_max = False
                push(Clique(c.nodes, c.begin, l))
            if is_max:
                emitted += 1
                yield c
    except MemoryError:
        raise EnumerationError(emitted) from None


def iter_maximal_cliques(stream: LinkStream, order: str = "lifo") -> Iterator[Clique]:
    """Yield maximal cliques as they are found, each exactly once."""
    return _walk(stream, order)


def enumerate_maximal_cliques(
    stream: LinkStream,
    order: str = "lifo",
    on_clique: Optional[Callable[[Clique], None]] = None,
    debug: bool = False,
) -> set:
    """All maximal cliques of ``stream`` involving at least two nodes.

    ``on_clique`` is called on each clique as soon as it is proven maximal.
    With ``debug`` set, the result list is checked for duplicates.
    """
    result = []
    for c in _walk(stream, order):
        result.append(c)
        if on_clique is not None:
            on_clique(c)
    out = set(result)
    if debug:
        assert len(out) == len(result), "a maximal clique was emitted twice"
    return out

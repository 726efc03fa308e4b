"""Whitespace-separated text formats for streams and clique lists.

Duration streams hold one ``b e u v`` link per line, instantaneous streams one
``t u v`` event per line.  An optional ``#horizon α ω`` line declares the time
span; any other line starting with ``#`` is a comment.
"""

from __future__ import annotations

import json
from typing import Iterable, TextIO, Union

from .stream import Interval, StreamError, check_time

__all__ = [
    "ParseError",
    "parse_duration_stream",
    "parse_instant_stream",
    "detect_kind",
    "write_cliques",
    "read_cliques",
    "write_duration_stream",
    "write_instant_stream",
]


class ParseError(StreamError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _lines(source: Union[str, Iterable[str]]):
    if isinstance(source, str):
        source = source.splitlines()
    for lineno, line in enumerate(source, 1):
        yield lineno, line.strip()


def _int(token, lineno):
    try:
        return check_time(int(token))
    except ValueError as exc:
        raise ParseError(lineno, f"bad time value {token!r}") from exc


def _parse(source, width):
    records, horizon = [], None
    for lineno, line in _lines(source):
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if parts and parts[0] == "horizon":
                if len(parts) != 3:
                    raise ParseError(lineno, "expected '#horizon <begin> <end>'")
                try:
                    horizon = Interval(_int(parts[1], lineno), _int(parts[2], lineno))
                except ParseError:
                    raise
                except StreamError as exc:
                    raise ParseError(lineno, str(exc)) from None
            continue
        parts = line.split()
        if len(parts) != width:
            raise ParseError(lineno, f"expected {width} fields, got {len(parts)}")
        times = [_int(tok, lineno) for tok in parts[: width - 2]]
        u, v = parts[width - 2 :]
        if u == v:
            raise ParseError(lineno, f"self-loop on node {u!r}")
        if width == 4 and times[0] > times[1]:
            raise ParseError(lineno, f"begin {times[0]} > end {times[1]}")
        records.append((*times, u, v))
    return records, horizon


def parse_duration_stream(source):
    """Parse ``b e u v`` lines; returns ``(records, horizon or None)`` in file order."""
    return _parse(source, 4)


def parse_instant_stream(source):
    """Parse ``t u v`` lines, dropping repeated ``(t, {u, v})`` events."""
    records, horizon = _parse(source, 3)
    seen, unique = set(), []
    for t, u, v in records:
        key = (t, min(u, v), max(u, v))
        if key not in seen:
            seen.add(key)
            unique.append((t, u, v))
    return unique, horizon


def detect_kind(source) -> str:
    """``"duration"`` or ``"instant"`` from the first data line's width."""
    for _, line in _lines(source):
        if line and not line.startswith("#"):
            return "duration" if len(line.split()) == 4 else "instant"
    return "duration"


def _sorted_labelled(cliques, labels):
    rows = []
    for c in cliques:
        nodes, b, e = c
        rows.append((b, e, sorted(labels[u] for u in nodes) if labels is not None else list(nodes)))
    rows.sort()
    return rows


def write_cliques(cliques, sink: TextIO, labels=None, fmt: str = "plain") -> None:
    """Write cliques sorted by ``(begin, end, nodes)`` using node labels."""
    if fmt not in ("plain", "json-lines"):
        raise ValueError(f"unknown clique format {fmt!r}")
    for b, e, names in _sorted_labelled(cliques, labels):
        if fmt == "plain":
            sink.write(" ".join([str(b), str(e), *map(str, names)]) + "\n")
        else:
            sink.write(json.dumps({"begin": b, "end": e, "nodes": names}, separators=(",", ":")) + "\n")


def read_cliques(source, fmt: str = "plain") -> list:
    """Inverse of :func:`write_cliques`: ``(label tuple, begin, end)`` per line."""
    out = []
    for lineno, line in _lines(source):
        if not line:
            continue
        if fmt == "json-lines":
            obj = json.loads(line)
            out.append((tuple(obj["nodes"]), int(obj["begin"]), int(obj["end"])))
        else:
            parts = line.split()
            if len(parts) < 4:
                raise ParseError(lineno, "a clique line needs begin, end and two nodes")
            out.append((tuple(parts[2:]), _int(parts[0], lineno), _int(parts[1], lineno)))
    return out


def write_duration_stream(stream, sink: TextIO) -> None:
    sink.write(f"#horizon {stream.horizon.begin} {stream.horizon.end}\n")
    for b, e, u, v in stream.labelled_links():
        sink.write(f"{b} {e} {u} {v}\n")


def write_instant_stream(instant, sink: TextIO) -> None:
    sink.write(f"#horizon {instant.horizon.begin} {instant.horizon.end}\n")
    labels = instant.labels
    for t, u, v in instant.events():
        sink.write(f"{t} {labels[u]} {labels[v]}\n")

"""Maximal clique enumeration in link streams with durations, and maximal
Δ-cliques of instantaneous link streams through a sliding-window reduction."""

__version__ = "0.1.0"

from .cliques import (
    Clique,
    EnumerationError,
    EnumState,
    enumerate_maximal_cliques,
    init_candidates,
    iter_maximal_cliques,
    node_extensions,
    right_extension_bound,
)
from .delta import (
    InstantStream,
    build_instant_stream,
    enumerate_maximal_delta_cliques,
    pair_availability,
    shift_clique,
    transform,
)
from .generators import generate_random_stream, random_records
from .stream import (
    Interval,
    LinkStream,
    StreamError,
    StreamStats,
    TimeOverflowError,
    build_stream,
    covering_interval,
    is_clique,
    stream_stats,
)
from .streamio import (
    ParseError,
    parse_duration_stream,
    parse_instant_stream,
    read_cliques,
    write_cliques,
    write_duration_stream,
    write_instant_stream,
)

import pytest
from hypothesis import strategies as st

from linkcliques import build_instant_stream, build_stream

ABCD_LINKS = [
    (2, 10, "a", "b"),
    (4, 16, "b", "c"),
    (6, 12, "a", "c"),
    (8, 16, "c", "d"),
    (13, 17, "b", "d"),
]

ABCD_TEXT = "#horizon 0 20\n" + "".join(f"{b} {e} {u} {v}\n" for b, e, u, v in ABCD_LINKS)

# (labels, begin, end) of every maximal clique of the four-node a-b-c-d example stream
ABCD_CLIQUES = {
    (("a", "b", "c"), 6, 10),
    (("b", "c", "d"), 13, 16),
    (("a", "b"), 2, 10),
    (("b", "c"), 4, 16),
    (("a", "c"), 6, 12),
    (("c", "d"), 8, 16),
    (("b", "d"), 13, 17),
}


@pytest.fixture
def abcd():
    return build_stream(ABCD_LINKS, (0, 20))


def labelled(cliques, labels):
    return {c.labelled(labels) for c in cliques}


def covered_points(intervals, lo, hi):
    """Doubled-grid points in [2*lo, 2*hi] covered by a union of closed intervals."""
    return {p for p in range(2 * lo, 2 * hi + 1) if any(2 * b <= p <= 2 * e for b, e in intervals)}


@st.composite
def duration_records(draw, max_nodes=6, max_links=30, max_horizon=100):
    n = draw(st.integers(2, max_nodes))
    span = draw(st.integers(0, max_horizon))
    m = draw(st.integers(0, max_links))
    recs = []
    for _ in range(m):
        u = draw(st.integers(0, n - 1))
        v = draw(st.integers(0, n - 2))
        v = v + 1 if v >= u else v
        b = draw(st.integers(0, span))
        e = draw(st.integers(b, span))
        recs.append((b, e, f"v{u}", f"v{v}"))
    return recs, span


@st.composite
def instant_records(draw, max_nodes=5, max_events=20, max_horizon=30):
    n = draw(st.integers(2, max_nodes))
    span = draw(st.integers(0, max_horizon))
    m = draw(st.integers(0, max_events))
    recs = []
    for _ in range(m):
        u = draw(st.integers(0, n - 1))
        v = draw(st.integers(0, n - 2))
        v = v + 1 if v >= u else v
        recs.append((draw(st.integers(0, span)), f"v{u}", f"v{v}"))
    return recs, span


def stream_of(drawn):
    recs, span = drawn
    return build_stream(recs, (0, span))


def instant_of(drawn):
    recs, span = drawn
    return build_instant_stream(recs, (0, span))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

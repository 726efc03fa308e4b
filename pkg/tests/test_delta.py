import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linkcliques import (
    Clique,
    StreamError,
    TimeOverflowError,
    build_instant_stream,
    enumerate_maximal_delta_cliques,
    generate_random_stream,
    pair_availability,
    shift_clique,
    transform,
)
from linkcliques.stream import INT64_MAX

from conftest import covered_points, instant_of, instant_records


def uv_stream(times, horizon):
    return build_instant_stream([(t, "u", "v") for t in times], horizon)


def by_label(stream):
    return {
        (stream.labels[u], stream.labels[v]): [tuple(iv) for iv in ivs]
        for (u, v), ivs in stream.pair_index.items()
    }


class TestInstantStream:
    def test_dedup_and_sort(self):
        ins = build_instant_stream([(3, "u", "v"), (1, "v", "u"), (3, "u", "v")])
        assert ins.pair_events == {(0, 1): (1, 3)} and ins.m == 2

    def test_self_loop(self):
        with pytest.raises(StreamError):
            build_instant_stream([(1, "u", "u")])

    def test_outside_horizon(self):
        with pytest.raises(StreamError):
            build_instant_stream([(11, "u", "v")], (0, 10))


class TestPairAvailability:
    def test_shared_point_merges(self):
        assert pair_availability([1, 3, 8], 2) == [(1, 5), (8, 10)]

    def test_zero_delta(self):
        assert pair_availability([5], 0) == [(5, 5)]

    def test_gap(self):
        assert pair_availability([0, 10], 3) == [(0, 3), (10, 13)]

    def test_overflow(self):
        with pytest.raises(TimeOverflowError):
            pair_availability([INT64_MAX - 1], 2)

    def test_unsorted_rejected(self):
        with pytest.raises(StreamError):
            pair_availability([3, 1], 2)

    @settings(max_examples=200, deadline=None)
    @given(st.sets(st.integers(0, 40), max_size=12), st.integers(0, 8))
    def test_union_definition(self, events, delta):
        events = sorted(events)
        got = pair_availability(events, delta)
        assert covered_points(got, 0, 50) == covered_points([(t, t + delta) for t in events], 0, 50)
        assert all(got[i].end < got[i + 1].begin for i in range(len(got) - 1))

    @settings(max_examples=100, deadline=None)
    @given(st.sets(st.integers(0, 40), max_size=12), st.integers(0, 8), st.integers(0, 8))
    def test_monotone_in_delta(self, events, d1, d2):
        lo, hi = sorted((d1, d2))
        events = sorted(events)
        small = covered_points(pair_availability(events, lo), 0, 50)
        assert small <= covered_points(pair_availability(events, hi), 0, 50)


class TestTransform:
    def test_three_events(self):
        out = transform(uv_stream([1, 3, 8], (0, 10)), 2)
        assert out.horizon == (2, 10)
        assert by_label(out) == {("u", "v"): [(2, 5), (8, 10)]}

    def test_zero_delta_keeps_points(self):
        out = transform(uv_stream([1, 3, 8], (0, 10)), 0)
        assert out.horizon == (0, 10)
        assert by_label(out) == {("u", "v"): [(1, 1), (3, 3), (8, 8)]}

    def test_full_span(self):
        out = transform(uv_stream([0], (0, 5)), 5)
        assert out.horizon == (5, 5)
        assert by_label(out) == {("u", "v"): [(5, 5)]}

    def test_clipping_keeps_boundary_points(self):
        out = transform(uv_stream([0], (0, 10)), 3)
        assert out.horizon == (3, 10)
        assert by_label(out) == {("u", "v"): [(3, 3)]}

    @settings(max_examples=100, deadline=None)
    @given(instant_records(), st.integers(0, 30))
    def test_no_pair_vanishes(self, drawn, delta):
        # an event t in [α, ω] always leaves max(t, α+Δ)..min(t+Δ, ω) nonempty
        ins = instant_of(drawn)
        delta = min(delta, ins.horizon.end - ins.horizon.begin)
        assert set(transform(ins, delta).pair_index) == set(ins.pair_events)

    @pytest.mark.parametrize("delta", [-1, 11])
    def test_delta_out_of_range(self, delta):
        with pytest.raises(StreamError):
            transform(uv_stream([1], (0, 10)), delta)

    def test_empty(self):
        out = transform(build_instant_stream([], (0, 10)), 4)
        assert out.m == 0 and out.horizon == (4, 10)

    @settings(max_examples=200, deadline=None)
    @given(instant_records(), st.integers(0, 6))
    def test_pointwise_presence(self, drawn, delta):
        ins = instant_of(drawn)
        alpha, omega = ins.horizon
        delta = min(delta, omega - alpha)
        out = transform(ins, delta)
        for pair, times in ins.pair_events.items():
            ivs = out.pair_index.get(pair, ())
            assert all(out.horizon.contains_interval(iv) for iv in ivs)
            assert all(ivs[i].end < ivs[i + 1].begin for i in range(len(ivs) - 1))
            for t in range(alpha + delta, omega + 1):
                linked = any(iv.contains(t) for iv in ivs)
                assert linked == any(t - delta <= s <= t for s in times)


class TestShift:
    def test_to_delta(self):
        assert shift_clique(Clique((0, 1), 0, 9), 2, "to_delta") == Clique((0, 1), 2, 9)

    def test_to_stream(self):
        assert shift_clique(Clique((0, 1), 2, 9), 2, "to_stream") == Clique((0, 1), 0, 9)

    def test_zero_is_identity(self):
        c = Clique((0, 1), 4, 7)
        assert shift_clique(c, 0, "to_delta") == c == shift_clique(c, 0, "to_stream")

    def test_empty_result_rejected(self):
        with pytest.raises(StreamError):
            shift_clique(Clique((0, 1), 0, 1), 2, "to_delta")

    @given(st.integers(-50, 50), st.integers(0, 50), st.integers(0, 20))
    def test_inverse(self, x, length, delta):
        c = Clique((0, 1), x, x + length + delta)
        assert shift_clique(shift_clique(c, delta, "to_delta"), delta, "to_stream") == c


class TestDeltaCliques:
    def test_three_events(self):
        got = enumerate_maximal_delta_cliques(uv_stream([1, 3, 8], (0, 10)), 2)
        assert got == {Clique((0, 1), 0, 5), Clique((0, 1), 6, 10)}

    def test_single_event(self):
        assert enumerate_maximal_delta_cliques(uv_stream([5], (0, 10)), 3) == {Clique((0, 1), 2, 8)}

    def test_zero_delta(self):
        assert enumerate_maximal_delta_cliques(uv_stream([5], (0, 10)), 0) == {Clique((0, 1), 5, 5)}

    @settings(max_examples=100, deadline=None)
    @given(instant_records(), st.integers(0, 6))
    def test_intervals_stay_in_horizon(self, drawn, delta):
        ins = instant_of(drawn)
        delta = min(delta, ins.horizon.end - ins.horizon.begin)
        for c in enumerate_maximal_delta_cliques(ins, delta):
            assert ins.horizon.begin <= c.begin and c.end - c.begin >= delta


def test_transform_scales_to_1e5_events():
    ins = generate_random_stream("instant", 100, 10**5, (0, 10**6), seed=5)
    t0 = time.perf_counter()
    out = transform(ins, 60)
    assert time.perf_counter() - t0 < 20
    assert 0 < out.m <= ins.m

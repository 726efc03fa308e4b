"""Command-line interface: ``linkcliques <subcommand> ...``.

Exit codes: 0 success, 1 usage or input error, 2 verification failure.
Results go to stdout (or ``--output``); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager

from . import __version__
from .cliques import _walk, enumerate_maximal_cliques
from .delta import build_instant_stream, check_delta, shift_clique, transform
from .generators import random_records
from .oracle import OracleLimits, oracle_maximal_cliques, oracle_maximal_delta_cliques
from .stream import StreamError, build_stream, stream_stats
from .streamio import (
    detect_kind,
    parse_duration_stream,
    parse_instant_stream,
    write_cliques,
    write_duration_stream,
)

BENCH_HEADER = ["dataset", "delta", "n", "m", "clique_count", "transform_ms", "enum_ms", "total_ms"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _diag(msg):
    print(msg, file=sys.stderr)


@contextmanager
def _sink(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_duration(path):
    records, horizon = parse_duration_stream(_read_text(path))
    return build_stream(records, horizon)


def load_instant(path):
    records, horizon = parse_instant_stream(_read_text(path))
    return build_instant_stream(records, horizon)


def cmd_cliques(args):
    t0 = time.perf_counter()
    stream = load_duration(args.input)
    found = enumerate_maximal_cliques(stream)
    with _sink(args.output) as out:
        write_cliques(found, out, stream.labels, args.format)
    elapsed = (time.perf_counter() - t0) * 1000
    _diag(f"n={stream.n} m={stream.m} cliques={len(found)} elapsed_ms={elapsed:.1f}")
    return 0


def cmd_delta_cliques(args):
    t0 = time.perf_counter()
    instant = load_instant(args.input)
    delta = check_delta(instant.horizon, args.delta)
    stretched = transform(instant, delta)
    found = [shift_clique(c, delta, "to_stream") for c in enumerate_maximal_cliques(stretched)]
    with _sink(args.output) as out:
        write_cliques(found, out, instant.labels, args.format)
    elapsed = (time.perf_counter() - t0) * 1000
    _diag(
        f"n={instant.n} events={instant.m} delta={delta} links={stretched.m} "
        f"cliques={len(found)} elapsed_ms={elapsed:.1f}"
    )
    return 0


def cmd_transform(args):
    instant = load_instant(args.input)
    stretched = transform(instant, args.delta)
    with _sink(args.output) as out:
        write_duration_stream(stretched, out)
    _diag(f"events={instant.m} links={stretched.m} horizon={stretched.horizon}")
    return 0


def cmd_stats(args):
    text = _read_text(args.input)
    kind = detect_kind(text) if args.kind == "auto" else args.kind
    if kind == "instant":
        records, horizon = parse_instant_stream(text)
        instant = build_instant_stream(records, horizon)
        rows = [
            ("kind", "instant"),
            ("n", instant.n),
            ("m", instant.m),
            ("horizon", f"{instant.horizon.begin} {instant.horizon.end}"),
            ("pair_count", len(instant.pair_events)),
        ]
    else:
        records, horizon = parse_duration_stream(text)
        st = stream_stats(build_stream(records, horizon))
        rows = [
            ("kind", "duration"),
            ("n", st.n),
            ("m", st.m),
            ("horizon", f"{st.horizon.begin} {st.horizon.end}"),
            ("pair_count", st.pair_count),
            ("total_link_duration", st.total_link_duration),
            ("isolated_nodes", st.isolated_nodes),
        ]
    for key, value in rows:
        print(f"{key} {value}")
    return 0


def _parse_grid(text, span=None):
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok == "span":
            if span is not None:
                out.append(span)
            else:
                out.append("span")
        else:
            try:
                out.append(int(tok))
            except ValueError:
                raise UsageError(f"bad delta value {tok!r}") from None
    return out


def _random_small(rng, kind, max_nodes, max_links, max_horizon):
    n = rng.randint(2, max_nodes)
    m = rng.randint(1, max_links)
    span = rng.randint(1, max_horizon)
    seed = rng.randrange(2**32)
    return random_records(kind, n, m, (0, span), seed, max_duration=max(1, span // 3)), span


def run_check(kind, trials, max_nodes, max_links, seed, deltas="0,1,2,5,span", max_horizon=100,
              inject_fault=False, report=_diag):
    """Randomised fast-path vs oracle comparison; returns the list of failing trials."""
    limits = OracleLimits(max_nodes=max_nodes, max_links=max_links)

    def fast(stream):
        return set(_walk(stream, check_node_maximality=not inject_fault))

    failures = []
    for i in range(trials):
        trial_seed = seed * 1_000_003 + i
        rng = random.Random(trial_seed)
        if kind == "duration":
            records, span = _random_small(rng, "duration", max_nodes, max_links, max_horizon)
            stream = build_stream(records, (0, span))
            if fast(stream) != oracle_maximal_cliques(stream, limits):
                failures.append((i, trial_seed, None))
                report(f"trial {i} seed {trial_seed}: mismatch")
        else:
            records, span = _random_small(rng, "instant", max_nodes, max_links, max_horizon)
            instant = build_instant_stream(records, (0, span))
            for d in _parse_grid(deltas, span):
                if d > span:
                    continue
                got = {shift_clique(c, d, "to_stream") for c in fast(transform(instant, d))}
                if got != oracle_maximal_delta_cliques(instant, d, limits):
                    failures.append((i, trial_seed, d))
                    report(f"trial {i} seed {trial_seed} delta {d}: mismatch")
    return failures


def cmd_check(args):
    t0 = time.perf_counter()
    max_horizon = args.max_horizon if args.max_horizon is not None else (
        100 if args.kind == "duration" else 30
    )
    failures = run_check(
        args.kind,
        args.trials,
        args.max_nodes,
        args.max_links,
        args.seed,
        deltas=args.deltas,
        max_horizon=max_horizon,
        inject_fault=args.inject_fault,
    )
    elapsed = time.perf_counter() - t0
    status = "FAIL" if failures else "ok"
    _diag(f"check {args.kind}: {args.trials} trials, {len(failures)} failures, {elapsed:.1f}s [{status}]")
    return 2 if failures else 0


def bench_cell(path, kind, delta):
    """One timed (input, delta) cell after one untimed warm-up run."""
    text = _read_text(path)
    if kind == "instant":
        records, horizon = parse_instant_stream(text)
        source = build_instant_stream(records, horizon)
        delta = check_delta(source.horizon, delta)
    else:
        records, horizon = parse_duration_stream(text)
        source = build_stream(records, horizon)

    def run():
        t0 = time.perf_counter()
        stream = transform(source, delta) if kind == "instant" else source
        t1 = time.perf_counter()
        count = len(enumerate_maximal_cliques(stream))
        t2 = time.perf_counter()
        return count, (t1 - t0) * 1000, (t2 - t1) * 1000, (t2 - t0) * 1000

    run()
    count, tr_ms, en_ms, tot_ms = run()
    return {
        "dataset": path,
        "delta": delta if kind == "instant" else "n/a",
        "n": source.n,
        "m": source.m,
        "clique_count": count,
        "transform_ms": round(tr_ms),
        "enum_ms": round(en_ms),
        "total_ms": round(tot_ms),
    }


def cmd_bench(args):
    grid = _parse_grid(args.delta_grid) if args.delta_grid else []
    if "span" in grid:
        raise UsageError("'span' is not accepted in a bench grid")
    cells = []
    for path in args.inputs:
        kind = detect_kind(_read_text(path)) if args.kind == "auto" else args.kind
        if kind == "instant":
            if not grid:
                raise UsageError(f"{path} is an instantaneous stream; --delta-grid is required")
            cells.extend((path, kind, d) for d in grid)
        else:
            cells.append((path, kind, None))

    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(bench_cell, *zip(*cells)))
    else:
        rows = [bench_cell(*cell) for cell in cells]

    with _sink(args.csv) as out:
        writer = csv.DictWriter(out, fieldnames=BENCH_HEADER, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    for row in rows:
        _diag(f"{row['dataset']} delta={row['delta']} cliques={row['clique_count']} total_ms={row['total_ms']}")
    return 0


def build_parser():
    parser = _Parser(prog="linkcliques", description="Maximal cliques in link streams.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("cliques", help="maximal cliques of a duration stream (b e u v lines)")
    p.add_argument("input")
    p.add_argument("--format", choices=["plain", "json-lines"], default="plain")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_cliques)

    p = sub.add_parser("delta-cliques", help="maximal delta-cliques of an instantaneous stream (t u v lines)")
    p.add_argument("input")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--format", choices=["plain", "json-lines"], default="plain")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_delta_cliques)

    p = sub.add_parser("transform", help="write the delta-stretched duration stream")
    p.add_argument("input")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("check", help="randomised comparison against the brute-force oracle")
    p.add_argument("--kind", choices=["duration", "delta"], default="duration")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-nodes", type=int, default=6)
    p.add_argument("--max-links", type=int, default=30)
    p.add_argument("--max-horizon", type=int, default=None,
                   help="largest horizon span drawn (default 100 for duration, 30 for delta)")
    p.add_argument("--deltas", default="0,1,2,5,span",
                   help="comma-separated delta grid for --kind delta; 'span' is the horizon length")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="time transform and enumeration, one CSV row per cell")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--delta-grid", help="comma-separated deltas (required for instantaneous inputs)")
    p.add_argument("--csv", help="output CSV path (default stdout)")
    p.add_argument("--kind", choices=["auto", "duration", "instant"], default="auto")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("stats", help="print stream statistics")
    p.add_argument("input")
    p.add_argument("--kind", choices=["auto", "duration", "instant"], default="auto")
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (StreamError, UsageError, OSError) as exc:
        _diag(f"linkcliques {args.command}: error: {exc}")
        return 1


if __name__ == "__main__":
    sys.exit(main())

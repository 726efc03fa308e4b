"""Compare the numba and numpy interval-merge kernels.

Times ``merge_segments`` on synthetic Δ-stretched event arrays of growing size
and checks that both backends return identical arrays.

    python benchmarks/bench_kernels.py --sizes 10000 100000 1000000 --delta 60
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from linkcliques import kernels
from linkcliques._accel import HAVE_NUMBA


def make_segments(m, pairs, span, delta, seed):
    rng = np.random.default_rng(seed)
    p = rng.integers(0, pairs, size=m)
    t = rng.integers(0, span, size=m)
    order = np.lexsort((t, p))
    p, t = p[order], t[order]
    return p, t, t + delta


def best_of(fn, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[10_000, 100_000, 1_000_000])
    parser.add_argument("--pairs", type=int, default=4950)
    parser.add_argument("--delta", type=int, default=60)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = {"numpy": kernels.merge_segments_numpy}
    if HAVE_NUMBA:
        backends["numba"] = kernels.merge_segments_numba
        kernels.merge_segments_numba(*make_segments(10, 2, 100, 5, 0))  # compile
    else:
        print("numba not installed; timing numpy only")

    print(f"{'m':>10} " + " ".join(f"{name + '_ms':>10}" for name in backends) + f" {'speedup':>8}")
    for m in args.sizes:
        segs = make_segments(m, args.pairs, 10 * m, args.delta, args.seed)
        times, outs = {}, {}
        for name, fn in backends.items():
            times[name], outs[name] = best_of(fn, segs, args.repeats)
        if len(outs) == 2:
            for a, b in zip(outs["numpy"], outs["numba"]):
                np.testing.assert_array_equal(a, b)
            speedup = f"{times['numpy'] / times['numba']:8.1f}"
        else:
            speedup = f"{'-':>8}"
        print(f"{m:>10} " + " ".join(f"{times[n] * 1000:>10.2f}" for n in backends) + f" {speedup}")


if __name__ == "__main__":
    main()

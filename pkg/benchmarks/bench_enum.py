"""Compare the enumeration backends on identical workloads.

Usage::

    python benchmarks/bench_enum.py [--sizes 14,18,20] [--repeats 3]

Each case enumerates the full span of k random generators over F_p and
reports wall time per backend, the speedup, and checks that both return
the same minimum weight.
"""

import argparse
import time

import numpy as np

from subsystem_codes import _enum


def run_case(p, k, groups, gsize, repeats, seed):
    rng = np.random.default_rng(seed)
    gens = rng.integers(0, p, size=(k, groups * gsize)).astype(np.int64)
    results = {}
    times = {}
    for backend in _enum.available_backends():
        # warm up once so numba's compile time is not billed
        _enum.min_weight_range(gens, p, groups, gsize, 1, p ** k,
                               backend=backend)
        best = float("inf")
        for _ in range(repeats):
            t0 = time.perf_counter()
            got = _enum.min_weight_range(gens, p, groups, gsize, 1, p ** k,
                                         backend=backend)
            best = min(best, time.perf_counter() - t0)
        results[backend] = got[0]
        times[backend] = best
    if len(set(results.values())) != 1:
        raise AssertionError(f"backends disagree: {results}")
    return results, times


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="14,18,20",
                    help="comma-separated exponents k (span size is p^k)")
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--groups", type=int, default=12)
    ap.add_argument("--group-size", type=int, default=2)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    print(f"{'span':>10} {'min_wt':>6} " +
          " ".join(f"{b:>12}" for b in _enum.available_backends()) +
          f" {'speedup':>8}")
    for k in sizes:
        results, times = run_case(args.p, k, args.groups, args.group_size,
                                  args.repeats, args.seed)
        cols = " ".join(f"{times[b] * 1e3:>10.2f}ms"
                        for b in _enum.available_backends())
        if "numba" in times and "numpy" in times:
            speed = f"{times['numpy'] / times['numba']:>7.1f}x"
        else:
            speed = "n/a"
        wt = next(iter(results.values()))
        print(f"{args.p}^{k:<8} {wt:>6} {cols} {speed}")


if __name__ == "__main__":
    main()

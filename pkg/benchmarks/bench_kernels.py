#!/usr/bin/env python3
"""Time the compiled walker against the numpy level expansion.

    python3 benchmarks/bench_kernels.py [--nmin 5] [--nmax 8] [--repeat 3]

Both backends produce the full sc(1) histogram; the script checks they agree
before reporting the best of ``--repeat`` runs.
"""
import argparse
import time

import numpy as np

from chordlab import _kernels as K


def best_of(fn, repeat):
    times, result = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmin", type=int, default=5)
    ap.add_argument("--nmax", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    # warm up so compilation is not counted
    K.histogram_numba(3, K.FILTER_ALL, 1, K.STAT_SC, 1)

    print(f"{'n':>3}  {'diagrams':>10}  {'numba s':>9}  {'numpy s':>9}  {'speedup':>7}")
    for n in range(args.nmin, args.nmax + 1):
        tj, hj = best_of(lambda: K.histogram_numba(n, K.FILTER_ALL, 1, K.STAT_SC, 1), args.repeat)
        tn, hn = best_of(lambda: K.histogram_numpy(n, K.FILTER_ALL, 1, K.STAT_SC, 1), args.repeat)
        if not np.array_equal(hj, hn):
            raise SystemExit(f"backends disagree at n={n}: {hj} vs {hn}")
        print(f"{n:>3}  {int(hj.sum()):>10}  {tj:>9.4f}  {tn:>9.4f}  {tn / tj:>6.1f}x")


if __name__ == "__main__":
    main()

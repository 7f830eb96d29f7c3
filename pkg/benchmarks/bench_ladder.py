"""Benchmark: jitted vs pure-numpy ladder evaluation at circle points.

Run as: python3 benchmarks/bench_ladder.py [N] [points]
The jitted path pays a one-time compile cost (excluded by a warmup call);
after that it wins by a wide margin for long ladders with few points and
narrows as the point count grows (the numpy path vectorizes over points).
"""

import sys
import time

import numpy as np

from circlepoly._accel import USE_NUMBA, ladder_eval, ladder_eval_numpy


def bench(fn, F, s, repeats=5):
    fn(F, s)  # warmup / compile
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(F, s)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 4096
    npts = int(sys.argv[2]) if len(sys.argv) > 2 else 64
    rng = np.random.default_rng(0)
    F = 0.5 * np.sqrt(rng.uniform(size=n)) * np.exp(2j * np.pi * rng.uniform(size=n))
    s = np.exp(2j * np.pi * rng.uniform(size=npts))
    t_np = bench(ladder_eval_numpy, F, s)
    print(f"ladder N={n}, points={npts}")
    print(f"  numpy fallback : {t_np * 1e3:8.2f} ms")
    if USE_NUMBA:
        t_nb = bench(ladder_eval, F, s)
        print(f"  numba kernel   : {t_nb * 1e3:8.2f} ms   ({t_np / t_nb:.1f}x)")
    else:
        print("  numba kernel   : disabled (CIRCLEPOLY_NO_NUMBA set or unavailable)")


if __name__ == "__main__":
    main()

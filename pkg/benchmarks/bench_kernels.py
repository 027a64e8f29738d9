"""Time the integer kernels under both backends.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each kernel runs once untimed per backend (numba compiles on first call), then
the best of ``--repeat`` runs is reported.  Results from both backends are
compared before timing, so a mismatch aborts the run.
"""

import argparse
import time

import numpy as np

from wps3 import _accel

CASES = [
    ("hilbert_table", (1, 6, 14, 21), 2000),
    ("hilbert_table", (1, 1, 1, 3), 4000),
    ("enumerate_exponents", (1, 2, 3, 6), 240),
    ("enumerate_exponents", (1, 1, 2, 4), 120),
    ("has_divisor", (1, 1, 1, 1), 40),
]


def run(kernel, weights, d):
    if kernel == "hilbert_table":
        return _accel.hilbert_table(weights, d)
    if kernel == "enumerate_exponents":
        return _accel.enumerate_exponents(weights, d)
    cands = _accel.enumerate_exponents(weights, d)
    gens = _accel.enumerate_exponents(weights, d // 4)
    return _accel.has_divisor(cands, gens)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    backends = ["numpy"] + (["numba"] if _accel.numba is not None else [])
    print(f"{'kernel':<22}{'weights':<16}{'d':>6}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for kernel, weights, d in CASES:
        results, timings = {}, {}
        for b in backends:
            with _accel.use_backend(b):
                results[b] = run(kernel, weights, d)
                timings[b] = best_of(lambda: run(kernel, weights, d), args.repeat)
        ref = results["numpy"]
        for b, r in results.items():
            if not np.array_equal(np.asarray(r), np.asarray(ref)):
                raise SystemExit(f"{kernel} {weights} d={d}: {b} disagrees with numpy")
        row = f"{kernel:<22}{str(weights):<16}{d:>6}" + "".join(f"{timings[b] * 1e3:>10.2f}ms" for b in backends)
        if "numba" in timings:
            row += f"{timings['numpy'] / timings['numba']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()

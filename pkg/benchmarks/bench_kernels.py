"""Benchmark the compiled kernels against their numpy fallbacks.

Run as a script:

    python3 benchmarks/bench_kernels.py [--repeats N]

Covers the two hot paths: the sequential attachment allocation loop and
the profiled offset-power-law objective. The compiled variants need
RANKLAWS_NUMBA left at its default; with the flag off only the numpy
numbers are reported.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from ranklaws import accel


def best_of(fn, args, repeats: int) -> float:
    fn(*args)  # warmup (includes jit compilation on first call)
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - start)
    return min(times)


def bench_simon(repeats: int):
    rng = np.random.default_rng(0)
    for steps in (10_000, 100_000, 1_000_000):
        u_new, u_pick = rng.random(steps - 1), rng.random(steps - 1)
        args = (u_new, u_pick, 0.1)
        numpy_t = best_of(accel.simon_owners_numpy, args, repeats)
        if accel.NUMBA_ENABLED:
            jit_t = best_of(accel.simon_owners_jit, args, repeats)
            yield f"simon_owners steps={steps:>9,}", numpy_t, jit_t
        else:
            yield f"simon_owners steps={steps:>9,}", numpy_t, None


def bench_profile(repeats: int):
    rng = np.random.default_rng(1)
    for n in (100, 1_000, 10_000, 100_000):
        log_values = np.sort(rng.normal(0.0, 1.0, n))[::-1].copy()
        args = (log_values, 3.7)
        numpy_t = best_of(accel.mandelbrot_profile_numpy, args, repeats)
        if accel.NUMBA_ENABLED:
            jit_t = best_of(accel.mandelbrot_profile_jit, args, repeats)
            yield f"mandelbrot_profile n={n:>7,}", numpy_t, jit_t
        else:
            yield f"mandelbrot_profile n={n:>7,}", numpy_t, None


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=7, help="timed repetitions per case (default 7)")
    args = parser.parse_args()

    print(f"compiled backend enabled: {accel.NUMBA_ENABLED}")
    header = f"{'kernel':<32} {'numpy':>12} {'compiled':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for rows in (bench_simon(args.repeats), bench_profile(args.repeats)):
        for label, numpy_t, jit_t in rows:
            if jit_t is None:
                print(f"{label:<32} {numpy_t * 1e3:>10.3f}ms {'-':>12} {'-':>9}")
            else:
                print(
                    f"{label:<32} {numpy_t * 1e3:>10.3f}ms {jit_t * 1e3:>10.3f}ms"
                    f" {numpy_t / jit_t:>8.1f}x"
                )


if __name__ == "__main__":
    main()

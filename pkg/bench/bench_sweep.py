#!/usr/bin/env python3
"""Benchmark the numba and numpy kernel backends on a sweep workload.

Run from the repository root:

    python bench/bench_sweep.py [--points 200000] [--repeats 5]
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from tunneltimes import kernels


def bench(fn, *args, repeats: int) -> float:
    fn(*args)  # warm-up (JIT compile on the numba path)
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=200_000)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    # keep clear of eps -> mu where the outside wave stops propagating
    eps = np.linspace(0.05, 0.90, args.points)
    u, mu = 2.0 * math.pi, 0.98

    cases = [
        ("rel", lambda e: kernels.rel_times_np(u, mu, e), "_rel_nb"),
        ("nonrel", lambda e: kernels.nonrel_times_np(u, mu, e), "_nonrel_nb"),
        (
            "superrel",
            lambda e: kernels.srel_times_np(u, mu, e, kernels.BPRIME_BALANCED, 0.0),
            "_srel_nb",
        ),
    ]
    print(f"grid: {args.points} points, best of {args.repeats}")
    for name, np_fn, nb_name in cases:
        t_np = bench(np_fn, eps, repeats=args.repeats)
        line = f"{name:9s} numpy {t_np * 1e3:8.2f} ms"
        if kernels.USE_NUMBA:
            nb = getattr(kernels, nb_name)
            if name == "superrel":
                out = tuple(np.empty_like(eps) for _ in range(5))
                t_nb = bench(
                    lambda e: nb(u, mu, e, False, kernels.BPRIME_BALANCED, 0.0, *out),
                    eps,
                    repeats=args.repeats,
                )
            else:
                out = tuple(np.empty_like(eps) for _ in range(3))
                t_nb = bench(
                    lambda e: nb(u, mu, e, False, *out), eps, repeats=args.repeats
                )
            line += f"   numba {t_nb * 1e3:8.2f} ms   speedup {t_np / t_nb:5.2f}x"
        else:
            line += "   (numba backend disabled)"
        print(line)


if __name__ == "__main__":
    main()

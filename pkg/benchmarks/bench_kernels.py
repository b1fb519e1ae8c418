#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Two workloads: the per-point rate pipeline on a 64x64x4 sweep grid, and the
discrete-bath correlation sums behind the spectrum oracle (10^4 modes on a
~10^4-point time grid). Usage: python benchmarks/bench_kernels.py
"""

import math
import time

import numpy as np

from dotphonon import _purekern
from dotphonon.constants import HBAR_UEV_NS

try:
    from dotphonon import _fastkern
except ImportError:
    _fastkern = None

WC = 10.0 * 19.27 / HBAR_UEV_NS
WCUT = 2.0 * math.pi * 1e-9


def timeit(fn, repeats: int = 3) -> float:
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def rates_workload():
    eps, dr = np.meshgrid(
        np.linspace(25.0, 400.0, 128), np.linspace(20.0, 300.0, 128), indexing="ij"
    )
    n = eps.size
    return (
        np.ascontiguousarray(eps.ravel()),
        np.full(n, 19.27),
        np.full(n, 12.20),
        np.ascontiguousarray(dr.ravel()),
        np.full(n, 0.1),
        np.full(n, 1.0),
        np.full(n, 0.5),
        WC,
        WCUT,
        WCUT,
        10.0,
    )


def corr_workload():
    n_modes = 10_000
    delta = 20.0 * WC / n_modes
    omegas = (np.arange(n_modes) + 0.5) * delta
    j = 0.5 * omegas * np.exp(-omegas / WC)
    lam2 = j * delta
    coth = 1.0 + 2.0 / np.expm1(0.6582119569 / (86.17333262 * 0.1) * omegas)
    dt = 2.0 * math.pi / (1.25 * (omegas[-1] + 420.0))
    n_t = int(math.ceil(6.0 / delta / dt)) + 1
    return omegas, lam2 * coth, lam2, dt, n_t


def main() -> None:
    print(f"{'workload':<28}{'pure':>12}{'compiled':>12}{'speedup':>10}")
    rows = [
        ("rates_grid (16384 points)", rates_workload(), "rates_grid"),
        ("corr_sums (1e4 x ~1e4)", corr_workload(), "corr_sums"),
    ]
    for label, args, attr in rows:
        t_pure = timeit(lambda: getattr(_purekern, attr)(*args))
        if _fastkern is None:
            print(f"{label:<28}{t_pure:>11.3f}s{'n/a':>12}{'':>10}")
            continue
        t_fast = timeit(lambda: getattr(_fastkern, attr)(*args))
        print(f"{label:<28}{t_pure:>11.3f}s{t_fast:>11.3f}s{t_pure / t_fast:>9.1f}x")
    if _fastkern is None:
        print("\ncompiled kernel not built; install without DOTPHONON_SKIP_EXT")

    # cross-check while we are at it: both backends must agree
    if _fastkern is not None:
        args = rates_workload()
        pure = _purekern.rates_grid(*args)
        fast = _fastkern.rates_grid(*args)
        worst = 0.0
        for p, f in zip(pure[:7], fast[:7]):
            mask = ~np.isnan(p)
            if mask.any():
                denom = np.maximum(np.abs(p[mask]), 1e-300)
                worst = max(worst, float((np.abs(p[mask] - f[mask]) / denom).max()))
        print(f"\nbackend agreement (rates_grid): max rel diff = {worst:.2e}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Benchmark the compiled Monte Carlo kernel against the pure-NumPy fallback.

Run from the repository root:

    python benchmarks/bench_mc.py

Both kernels produce bit-identical output (the test suite enforces it);
this script only measures throughput.
"""

import time

import numpy as np

from ougls.models import ModelKind
from ougls.simulate import HAVE_COMPILED, SimSpec, run_monte_carlo

CASES = [
    (ModelKind.INTERCEPT_ONLY, (0.0,), 10, 1.0, 200_000),
    (ModelKind.INTERCEPT_SLOPE, (2.0, 3.0), 10, 5.0, 200_000),
    (ModelKind.INTERCEPT_SLOPE, (2.0, 3.0), 50, 5.0, 200_000),
    (ModelKind.SLOPE_ONLY, (1.0,), 200, 10.0, 50_000),
]


def time_backend(spec: SimSpec, backend: str, repeats: int = 3) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        run_monte_carlo(spec, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    if not HAVE_COMPILED:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation`")
    print(f"{'model':<10} {'n':>4} {'reps':>8} {'pure [s]':>10} "
          f"{'compiled [s]':>13} {'speedup':>8}")
    for model, beta, n, lam, reps in CASES:
        spec = SimSpec(model=model, beta=beta, n=n, lam=lam, reps=reps, seed=20240817)
        t_pure = time_backend(spec, "pure")
        if HAVE_COMPILED:
            t_comp = time_backend(spec, "compiled")
            a = run_monte_carlo(spec, backend="pure")
            b = run_monte_carlo(spec, backend="compiled")
            assert np.array_equal(a.empirical_cov, b.empirical_cov)
            print(f"{model.value:<10} {n:>4} {reps:>8} {t_pure:>10.3f} "
                  f"{t_comp:>13.3f} {t_pure / t_comp:>7.1f}x")
        else:
            print(f"{model.value:<10} {n:>4} {reps:>8} {t_pure:>10.3f} {'-':>13} {'-':>8}")


if __name__ == "__main__":
    main()

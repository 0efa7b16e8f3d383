"""Pure-NumPy Monte Carlo kernel, bit-identical to the compiled one.

Both kernels draw the same Philox words, build the lag-one recursion
e_j = rho * e_{j-1} + s * z_j, and accumulate the estimator weights over
j in left-to-right order.  The compiled path streams scalars; this one
vectorizes across replicates, which performs the same IEEE operations per
element in the same order (no fused multiply-add on either side).
"""

from __future__ import annotations

import numpy as np

from .streams import replicate_normals


def simulate_deviations(key: tuple[int, int], rep_start: int, reps: int, n: int,
                        rho: float, s: float, weights: np.ndarray) -> np.ndarray:
    """Estimator deviations W @ e for each replicate; returns (reps, p)."""
    p = weights.shape[0]
    z = replicate_normals(key, rep_start, reps, n)
    eps = np.empty_like(z)
    eps[:, 0] = z[:, 0]
    for j in range(1, n):
        eps[:, j] = rho * eps[:, j - 1] + s * z[:, j]
    out = np.zeros((reps, p))
    for k in range(p):
        acc = np.zeros(reps)
        for j in range(n):
            acc += weights[k, j] * eps[:, j]
        out[:, k] = acc
    return out

"""Counter-based random streams for reproducible parallel simulation.

Replicate i draws its noise from a dedicated, never-overlapping slice of a
Philox-4x64-10 keyed counter space: block b of replicate i uses the
256-bit counter (b, i, 0, 0).  Because each draw is a pure function of
(seed, replicate, position), results are independent of chunking, worker
count, and execution order.  The key is derived from the user seed with
numpy's SeedSequence.

The block function here is vectorized NumPy; the compiled kernel in
_mc_kernel.pyx walks the identical counter layout scalar-by-scalar, and a
test pins both against numpy.random.Philox word for word.

Standard normals come from applying the inverse normal CDF to the 53-bit
uniform (word >> 11 + 0.5) * 2**-53, which consumes exactly one word per
draw; a fixed consumption rate is what makes the counter layout exact.
"""

from __future__ import annotations

import numpy as np
from scipy.special import ndtri

__all__ = ["derive_key", "philox_block", "replicate_normals"]

PHILOX_M0 = np.uint64(0xD2E7470EE14C6C93)
PHILOX_M1 = np.uint64(0xCA5A826395121157)
PHILOX_W0 = np.uint64(0x9E3779B97F4A7C15)
PHILOX_W1 = np.uint64(0xBB67AE8584CAA73B)
ROUNDS = 10

_MASK32 = np.uint64(0xFFFFFFFF)
_S32 = np.uint64(32)
_S11 = np.uint64(11)
_U53 = 2.0 ** -53


def derive_key(seed: int) -> tuple[int, int]:
    """Hash a user seed into the 128-bit Philox key."""
    k = np.random.SeedSequence(seed).generate_state(2, np.uint64)
    return int(k[0]), int(k[1])


def _mulhilo(a: np.uint64, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """High and low words of the 64x64 -> 128 product, via 32-bit halves."""
    lo = a * b
    a_lo, a_hi = a & _MASK32, a >> _S32
    b_lo, b_hi = b & _MASK32, b >> _S32
    t = a_hi * b_lo + ((a_lo * b_lo) >> _S32)
    m = a_lo * b_hi + (t & _MASK32)
    hi = a_hi * b_hi + (t >> _S32) + (m >> _S32)
    return hi, lo


def philox_block(c0, c1, c2, c3, key: tuple[int, int]) -> tuple[np.ndarray, ...]:
    """Philox-4x64-10 block function over arrays of counters.

    Returns the four 64-bit output words for every input counter.
    """
    x0 = np.asarray(c0, dtype=np.uint64)
    x1 = np.broadcast_to(np.asarray(c1, dtype=np.uint64), x0.shape)
    x2 = np.broadcast_to(np.asarray(c2, dtype=np.uint64), x0.shape)
    x3 = np.broadcast_to(np.asarray(c3, dtype=np.uint64), x0.shape)
    bump = np.arange(ROUNDS, dtype=np.uint64)
    k0s = np.uint64(key[0]) + bump * PHILOX_W0
    k1s = np.uint64(key[1]) + bump * PHILOX_W1
    for r in range(ROUNDS):
        hi0, lo0 = _mulhilo(PHILOX_M0, x0)
        hi1, lo1 = _mulhilo(PHILOX_M1, x2)
        x0 = hi1 ^ x1 ^ k0s[r]
        x1 = lo1
        x2 = hi0 ^ x3 ^ k1s[r]
        x3 = lo0
    return x0, x1, x2, x3


def replicate_normals(key: tuple[int, int], rep_start: int, reps: int, n: int) -> np.ndarray:
    """Standard normals for replicates rep_start .. rep_start+reps-1.

    Returns a (reps, n) array; row i depends only on (key, rep_start + i).
    """
    blocks_per_rep = (n + 3) // 4
    c0 = np.tile(np.arange(blocks_per_rep, dtype=np.uint64), reps)
    c1 = np.repeat(np.arange(rep_start, rep_start + reps, dtype=np.uint64),
                   blocks_per_rep)
    out = philox_block(c0, c1, np.uint64(0), np.uint64(0), key)
    words = np.stack(out, axis=-1).reshape(reps, 4 * blocks_per_rep)[:, :n]
    uniforms = ((words >> _S11).astype(np.float64) + 0.5) * _U53
    return ndtri(uniforms)

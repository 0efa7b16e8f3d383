# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Monte Carlo kernel.

Walks the same Philox-4x64-10 counter layout as ougls.streams (block b of
replicate i at counter (b, i, 0, 0)), converts each 64-bit word to a
standard normal through the inverse CDF, runs the lag-one recursion and
accumulates the estimator weights, all in one pass with no per-replicate
allocations.  Built with -ffp-contract=off so results stay bit-identical
to the NumPy fallback.
"""

import numpy as np

cimport numpy as cnp
from scipy.special.cython_special cimport ndtri

cnp.import_array()

cdef extern from *:
    ctypedef unsigned long long uint128 "__uint128_t"

ctypedef unsigned long long u64

cdef enum:
    ROUNDS = 10

cdef u64 M0 = 0xD2E7470EE14C6C93ULL
cdef u64 M1 = 0xCA5A826395121157ULL
cdef u64 W0 = 0x9E3779B97F4A7C15ULL
cdef u64 W1 = 0xBB67AE8584CAA73BULL

cdef double U53 = 2.0 ** -53


cdef inline void _block(u64 c0, u64 c1, u64 k0, u64 k1, u64 *out) noexcept nogil:
    cdef u64 x0 = c0, x1 = c1, x2 = 0, x3 = 0
    cdef u64 hi0, lo0, hi1, lo1
    cdef uint128 prod
    cdef int r
    for r in range(ROUNDS):
        prod = <uint128>M0 * <uint128>x0
        hi0 = <u64>(prod >> 64)
        lo0 = <u64>prod
        prod = <uint128>M1 * <uint128>x2
        hi1 = <u64>(prod >> 64)
        lo1 = <u64>prod
        x0 = hi1 ^ x1 ^ k0
        x1 = lo1
        x2 = hi0 ^ x3 ^ k1
        x3 = lo0
        k0 += W0
        k1 += W1
    out[0] = x0
    out[1] = x1
    out[2] = x2
    out[3] = x3


def simulate_deviations(key, long long rep_start, long long reps, int n,
                        double rho, double s, double[:, ::1] weights):
    """Estimator deviations W @ e for each replicate; returns (reps, p)."""
    cdef int p = weights.shape[0]
    if weights.shape[1] != n:
        raise ValueError("weight matrix width does not match n")
    if p < 1 or p > 2:
        raise ValueError("weight matrix must have one or two rows")
    out_arr = np.zeros((reps, p))
    cdef double[:, ::1] out = out_arr
    cdef u64 k0 = <u64>key[0]
    cdef u64 k1 = <u64>key[1]
    cdef int blocks_per_rep = (n + 3) // 4
    cdef long long i
    cdef u64 rep
    cdef u64 words[4]
    cdef int b, w, j
    cdef double u, z, e, e_prev, acc0, acc1
    with nogil:
        for i in range(reps):
            rep = <u64>(rep_start + i)
            e_prev = 0.0
            acc0 = 0.0
            acc1 = 0.0
            j = 0
            for b in range(blocks_per_rep):
                _block(<u64>b, rep, k0, k1, words)
                for w in range(4):
                    if j >= n:
                        break
                    u = (<double>(words[w] >> 11) + 0.5) * U53
                    z = ndtri(u)
                    if j == 0:
                        e = z
                    else:
                        e = rho * e_prev + s * z
                    acc0 += weights[0, j] * e
                    if p == 2:
                        acc1 += weights[1, j] * e
                    e_prev = e
                    j += 1
            out[i, 0] = acc0
            if p == 2:
                out[i, 1] = acc1
    return out_arr

"""Replicated simulation of the regression with lag-one errors.

run_monte_carlo draws seed-deterministic error vectors, applies the
closed-form estimator weights replicate by replicate, and summarizes the
empirical moments next to the exact closed-form covariance.  Replicate i
is a pure function of (seed, i), so reports are byte-identical across
runs, chunk sizes, and kernel backends.

Two kernels implement the replicate loop: a compiled extension built from
_mc_kernel.pyx and a pure-NumPy fallback.  The import below selects the
compiled one when present; both produce bit-identical output and a test
enforces that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _mc_fallback
from .covariance import OuParams, TimeGrid, sigma_general
from .errors import DomainError
from .models import (
    ModelKind,
    closed_form_weights,
    design_matrix,
    reference_covariance,
)
from .streams import derive_key

try:
    from . import _mc_kernel
except ImportError:  # extension not built; the fallback is bit-identical
    _mc_kernel = None

HAVE_COMPILED = _mc_kernel is not None
DEFAULT_CHUNK = 65536

__all__ = [
    "HAVE_COMPILED",
    "SimSpec",
    "McReport",
    "sample_ou_errors",
    "sample_ou_errors_general",
    "run_monte_carlo",
]


@dataclass(frozen=True)
class SimSpec:
    """One simulation request: model, true coefficients, grid, replication."""

    model: ModelKind
    beta: tuple[float, ...]
    n: int
    lam: float
    reps: int
    seed: int

    def __post_init__(self) -> None:
        if len(self.beta) != self.model.n_params:
            raise DomainError(
                f"{self.model.value} model takes {self.model.n_params} "
                f"coefficient(s), got {len(self.beta)}"
            )
        if self.reps < 1:
            raise DomainError(f"replicate count must be >= 1, got {self.reps}")
        if self.n != int(self.n) or self.n < 2:
            raise DomainError(f"sample size must be an integer >= 2, got {self.n}")


@dataclass(frozen=True)
class McReport:
    """Summary of one Monte Carlo run.

    mc_standard_errors are the standard errors of the empirical means
    (sqrt of empirical variance over replicates); max_abs_z is the largest
    standardized deviation of an empirical mean from its true coefficient.
    """

    spec: SimSpec
    reps: int
    empirical_mean: np.ndarray
    empirical_cov: np.ndarray
    mc_standard_errors: np.ndarray
    reference_cov: np.ndarray
    max_abs_z: float

    def to_dict(self) -> dict:
        ref = np.asarray(self.reference_cov)
        emp = np.asarray(self.empirical_cov)
        return {
            "model": self.spec.model.value,
            "beta": list(self.spec.beta),
            "n": self.spec.n,
            "lambda": self.spec.lam,
            "seed": self.spec.seed,
            "reps": self.reps,
            "empirical_mean": self.empirical_mean.tolist(),
            "empirical_cov": emp.tolist(),
            "mc_standard_errors": self.mc_standard_errors.tolist(),
            "reference_cov": ref.tolist(),
            "cov_rel_deviation": ((emp - ref) / ref).tolist(),
            "max_abs_z": self.max_abs_z,
        }


def sample_ou_errors(n: int, params: OuParams, rng: np.random.Generator) -> np.ndarray:
    """One error vector on the even grid via the lag-one recursion.

    e_1 is standard normal and e_i = rho e_{i-1} + sqrt(1-rho^2) z_i;
    this is exact because the even-grid process is Markov.
    """
    if n != int(n) or n < 1:
        raise DomainError(f"sample size must be a positive integer, got {n!r}")
    n = int(n)
    z = rng.standard_normal(n)
    s = math.sqrt(params.one_minus_rho_sq)
    eps = np.empty(n)
    eps[0] = z[0]
    for i in range(1, n):
        eps[i] = params.rho * eps[i - 1] + s * z[i]
    return eps


def sample_ou_errors_general(grid: TimeGrid, lam: float,
                             rng: np.random.Generator) -> np.ndarray:
    """One error vector on an arbitrary grid via a Cholesky factor."""
    cov = sigma_general(grid, lam)
    low = np.linalg.cholesky(cov)
    return low @ rng.standard_normal(grid.n)


def _kernel(backend: str):
    if backend == "auto":
        backend = "compiled" if HAVE_COMPILED else "pure"
    if backend == "compiled":
        if not HAVE_COMPILED:
            raise DomainError("compiled kernel is not available in this build")
        return _mc_kernel.simulate_deviations, backend
    if backend == "pure":
        return _mc_fallback.simulate_deviations, backend
    raise DomainError(f"backend must be 'auto', 'compiled' or 'pure', got {backend!r}")


def run_monte_carlo(spec: SimSpec, backend: str = "auto",
                    chunk_size: int = DEFAULT_CHUNK) -> McReport:
    """Run the replicated simulation described by spec.

    Each replicate draws y = X beta + e and applies the closed-form
    estimator weights (the weights are the closed-form fit: estimate =
    W y = beta + W e, since W X is the identity).  Replicates are
    processed in chunks purely to bound memory; the output is invariant
    to chunk_size by construction.
    """
    kernel, _ = _kernel(backend)
    if chunk_size < 1:
        raise DomainError("chunk_size must be >= 1")
    params = OuParams(float(spec.n), spec.lam)
    weights = np.ascontiguousarray(closed_form_weights(spec.model, params))
    p = weights.shape[0]
    s = math.sqrt(params.one_minus_rho_sq)
    key = derive_key(spec.seed)

    deviations = np.empty((spec.reps, p))
    for start in range(0, spec.reps, chunk_size):
        count = min(chunk_size, spec.reps - start)
        deviations[start:start + count] = kernel(
            key, start, count, spec.n, params.rho, s, weights)

    beta = np.asarray(spec.beta, dtype=np.float64)
    estimates = beta + deviations
    mean = estimates.mean(axis=0)
    if spec.reps > 1:
        cov = np.cov(estimates, rowvar=False, ddof=1).reshape(p, p)
    else:
        cov = np.full((p, p), np.nan)
    mc_se = np.sqrt(np.diag(cov) / spec.reps)
    with np.errstate(invalid="ignore"):
        z = np.abs(mean - beta) / mc_se
    reference = reference_covariance(spec.model, spec.n, spec.lam)
    return McReport(
        spec=spec,
        reps=spec.reps,
        empirical_mean=mean,
        empirical_cov=cov,
        mc_standard_errors=mc_se,
        reference_cov=reference,
        max_abs_z=float(np.max(z)),
    )


def weight_identity_residual(model: ModelKind, params: OuParams) -> float:
    """Max-abs deviation of W @ X from the identity, a pure-weights check."""
    w = closed_form_weights(model, params)
    x = design_matrix(model, params.n_int)
    return float(np.max(np.abs(w @ x - np.eye(w.shape[0]))))

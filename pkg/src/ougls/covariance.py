"""Ornstein-Uhlenbeck correlation structure on the unit interval.

Observations sit at n points of [0, 1] and carry unit-variance errors with
correlation exp(-lam * |t_i - t_j|).  On the even grid t_i = (i-1)/(n-1)
this is a lag-one autoregression with coefficient rho = exp(-lam/(n-1)),
whose precision matrix is tridiagonal and known in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConditioningError, DomainError

# Below this value of 1 - rho^2 the precision matrix entries overflow any
# sensible scale; operations fail loudly instead of returning garbage.
CONDITIONING_FLOOR = 1e-12

__all__ = [
    "CONDITIONING_FLOOR",
    "OuParams",
    "TimeGrid",
    "rho",
    "one_minus_rho",
    "sigma_even",
    "sigma_inverse_even",
    "sigma_general",
    "apply_precision_even",
]


def _validate_lam(lam: float) -> None:
    if not (isinstance(lam, (int, float)) and math.isfinite(lam) and lam > 0):
        raise DomainError(f"decay rate must be a positive real, got {lam!r}")


def _validate(n: float, lam: float) -> None:
    if not (isinstance(n, (int, float)) and math.isfinite(n) and n >= 2):
        raise DomainError(f"sample size must be a real number >= 2, got {n!r}")
    _validate_lam(lam)


def rho(n: float, lam: float) -> float:
    """Lag-one correlation exp(-lam/(n-1)) of the even-grid process.

    n may be any real >= 2; the analytic formulas treat it as continuous.
    """
    _validate(n, lam)
    return math.exp(-lam / (n - 1.0))


def one_minus_rho(n: float, lam: float) -> float:
    """1 - rho computed from the exponent, without cancellation.

    For large n and small lam the direct subtraction 1 - exp(-lam/(n-1))
    loses all significant digits; -expm1 keeps full precision.  Every
    closed form downstream consumes this value rather than subtracting.
    """
    _validate(n, lam)
    return -math.expm1(-lam / (n - 1.0))


@dataclass(frozen=True)
class OuParams:
    """Correlation parameters (n, lam) with the derived rho and 1 - rho.

    n is real-valued for the analytic formulas; matrix constructors and
    data-facing operations require it to be a whole number.
    """

    n: float
    lam: float
    rho: float = field(init=False)
    one_minus_rho: float = field(init=False)

    def __post_init__(self) -> None:
        _validate(self.n, self.lam)
        x = -self.lam / (self.n - 1.0)
        object.__setattr__(self, "rho", math.exp(x))
        object.__setattr__(self, "one_minus_rho", -math.expm1(x))

    @property
    def one_minus_rho_sq(self) -> float:
        """1 - rho^2, factored as (1 - rho)(1 + rho)."""
        return self.one_minus_rho * (1.0 + self.rho)

    @property
    def n_int(self) -> int:
        """n as an integer; raises if n is not whole."""
        n = int(round(self.n))
        if self.n != n:
            raise DomainError(f"operation requires integer sample size, got {self.n}")
        return n

    def require_well_conditioned(self) -> None:
        if self.one_minus_rho_sq < CONDITIONING_FLOOR:
            raise ConditioningError(
                f"1 - rho^2 = {self.one_minus_rho_sq:.3e} is below the "
                f"conditioning floor {CONDITIONING_FLOOR:g} (rho too near 1)"
            )


@dataclass(frozen=True)
class TimeGrid:
    """Ordered observation times spanning [0, 1]."""

    points: np.ndarray

    def __post_init__(self) -> None:
        pts = np.asarray(self.points, dtype=np.float64)
        object.__setattr__(self, "points", pts)
        if pts.ndim != 1 or pts.size < 2:
            raise DomainError("a time grid needs at least two points")
        if not np.all(np.diff(pts) > 0):
            raise DomainError("time points must be strictly increasing")
        if pts[0] != 0.0 or pts[-1] != 1.0:
            raise DomainError("time grid must start at 0 and end at 1")

    @classmethod
    def even(cls, n: int) -> TimeGrid:
        if n != int(n) or n < 2:
            raise DomainError(f"even grid needs an integer n >= 2, got {n!r}")
        return cls(np.arange(int(n)) / (int(n) - 1.0))

    @property
    def n(self) -> int:
        return self.points.size

    def is_even(self, tol: float = 1e-9) -> bool:
        ref = np.arange(self.n) / (self.n - 1.0)
        return bool(np.max(np.abs(self.points - ref)) <= tol)


def _int_n(n: float) -> int:
    if n != int(n) or n < 2:
        raise DomainError(f"matrix construction needs an integer n >= 2, got {n!r}")
    return int(n)


def sigma_even(n: int, lam: float) -> np.ndarray:
    """Correlation matrix on the even grid: entry (i, j) = rho^|i-j|."""
    m = _int_n(n)
    r = rho(m, lam)
    idx = np.arange(m)
    return r ** np.abs(idx[:, None] - idx[None, :])


def sigma_inverse_even(n: int, lam: float) -> np.ndarray:
    """Closed-form tridiagonal inverse of sigma_even.

    Corner diagonal entries are 1/(1-rho^2), interior diagonal entries
    (1+rho^2)/(1-rho^2), and both off-diagonals -rho/(1-rho^2).
    """
    m = _int_n(n)
    p = OuParams(m, lam)
    p.require_well_conditioned()
    r = p.rho
    scale = 1.0 / p.one_minus_rho_sq
    out = np.zeros((m, m))
    idx = np.arange(m)
    out[idx, idx] = (1.0 + r * r) * scale
    out[0, 0] = out[m - 1, m - 1] = scale
    out[idx[:-1], idx[1:]] = -r * scale
    out[idx[1:], idx[:-1]] = -r * scale
    return out


def apply_precision_even(params: OuParams, v: np.ndarray) -> np.ndarray:
    """Tridiagonal product sigma_inverse_even @ v without forming the matrix."""
    params.require_well_conditioned()
    v = np.asarray(v, dtype=np.float64)
    m = params.n_int
    if v.shape[0] != m:
        raise DomainError(f"vector length {v.shape[0]} does not match n = {m}")
    r = params.rho
    out = (1.0 + r * r) * v
    out[0] = v[0]
    out[-1] = v[-1]
    out[:-1] -= r * v[1:]
    out[1:] -= r * v[:-1]
    return out / params.one_minus_rho_sq


def sigma_general(grid: TimeGrid, lam: float) -> np.ndarray:
    """Correlation matrix exp(-lam |t_i - t_j|) on an arbitrary grid.

    Reduces to sigma_even when the grid is even.
    """
    if not isinstance(grid, TimeGrid):
        grid = TimeGrid(np.asarray(grid, dtype=np.float64))
    _validate_lam(lam)
    t = grid.points
    return np.exp(-lam * np.abs(t[:, None] - t[None, :]))

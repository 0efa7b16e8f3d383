"""The three regression designs on the even grid and their closed-form fits.

Each model regresses observations at t_i = (i-1)/(n-1) on a constant, on
the time column, or on both.  Because the precision matrix is tridiagonal,
the normal equations collapse to a handful of scalar contractions of y and
the coefficient estimates are explicit weighted sums; this module carries
those weights and the resulting fits, with the exact estimator covariance
attached from the closed-form second moments.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .analysis import Quantity, exact_moment
from .covariance import OuParams
from .errors import DomainError

__all__ = [
    "ModelKind",
    "MvTerms",
    "FitResult",
    "design_matrix",
    "mv_terms",
    "closed_form_weights",
    "closed_form_fit",
    "reference_covariance",
]


class ModelKind(enum.Enum):
    INTERCEPT_ONLY = "intercept"
    SLOPE_ONLY = "slope"
    INTERCEPT_SLOPE = "full"

    @property
    def n_params(self) -> int:
        return 2 if self is ModelKind.INTERCEPT_SLOPE else 1


@dataclass(frozen=True)
class MvTerms:
    """Scalar contractions of the two-parameter normal equations.

    m1, m2, m3 are the entries of (1 - rho^2) X' Sigma^-1 X; det their
    2x2 determinant; v1, v2 the components of X' Sigma^-1 y.
    """

    m1: float
    m2: float
    m3: float
    det: float
    v1: float
    v2: float


@dataclass(frozen=True)
class FitResult:
    """Coefficient estimates with their exact covariance.

    model and params are present for even-grid closed-form fits and None
    for fits of generic problems.
    """

    estimates: np.ndarray
    covariance: np.ndarray
    model: ModelKind | None = None
    params: OuParams | None = None


def design_matrix(model: ModelKind, n: int) -> np.ndarray:
    """The n x p design: a ones column, the even-grid time column, or both."""
    if n != int(n) or n < 2:
        raise DomainError(f"design matrix needs an integer n >= 2, got {n!r}")
    n = int(n)
    t = np.arange(n) / (n - 1.0)
    if model is ModelKind.INTERCEPT_ONLY:
        return np.ones((n, 1))
    if model is ModelKind.SLOPE_ONLY:
        return t[:, None]
    if model is ModelKind.INTERCEPT_SLOPE:
        return np.column_stack([np.ones(n), t])
    raise DomainError(f"unknown model {model!r}")


def _check_response(params: OuParams, y: np.ndarray) -> tuple[int, np.ndarray]:
    y = np.asarray(y, dtype=np.float64)
    n = params.n_int
    if y.ndim != 1 or y.shape[0] != n:
        raise DomainError(f"response length {y.shape} does not match n = {n}")
    return n, y


def mv_terms(params: OuParams, y: np.ndarray) -> MvTerms:
    """Evaluate the two-parameter contractions at (params, y).

    m1 = 2u + (n-2)u^2 and m2 = u + (n-2)u^2/2 with u = 1 - rho;
    m3 = u^2 (n-2)(2n-3)/(6(n-1)) + ((n-2)u + 1)/(n-1);
    v1 = [y_1 + u * sum(interior y) + y_n] / (1 + rho);
    v2 = [-rho y_1 + u^2 * sum((i-1) y_i) + ((n-1) - rho(n-2)) y_n]
         / ((n-1)(1 - rho^2)).

    Interior sums accumulate left to right without compensation, so the
    produced values are bit-stable for a given build.
    """
    n, y = _check_response(params, y)
    r = params.rho
    u = params.one_minus_rho
    m1 = 2.0 * u + (n - 2.0) * u * u
    m2 = u + (n - 2.0) * u * u / 2.0
    m3 = (u * u * (n - 2.0) * (2.0 * n - 3.0) / (6.0 * (n - 1.0))
          + ((n - 2.0) * u + 1.0) / (n - 1.0))
    det = m1 * m3 - m2 * m2

    mid = 0.0
    mid_weighted = 0.0
    for i in range(1, n - 1):
        mid += y[i]
        mid_weighted += i * y[i]
    v1 = (y[0] + u * mid + y[n - 1]) / (1.0 + r)
    v2 = ((-r * y[0] + u * u * mid_weighted + ((n - 1.0) - r * (n - 2.0)) * y[n - 1])
          / ((n - 1.0) * params.one_minus_rho_sq))
    return MvTerms(m1=m1, m2=m2, m3=m3, det=det, v1=v1, v2=v2)


def closed_form_weights(model: ModelKind, params: OuParams) -> np.ndarray:
    """The p x n weight matrix W with estimate = W @ y.

    These are the closed-form estimator weights; W @ X is the identity,
    which the exact-recovery tests exercise directly.
    """
    params.require_well_conditioned()
    n = params.n_int
    r = params.rho
    u = params.one_minus_rho
    idx = np.arange(n, dtype=np.float64)

    # weight vectors of the contractions v1 and v2
    w1 = np.full(n, u)
    w1[0] = w1[-1] = 1.0
    w1 /= 1.0 + r
    w2 = u * u * idx
    w2[0] = -r
    w2[-1] = (n - 1.0) - r * (n - 2.0)
    w2 /= (n - 1.0) * params.one_minus_rho_sq

    if model is ModelKind.INTERCEPT_ONLY:
        w = np.full(n, u)
        w[0] = w[-1] = 1.0
        return (w / (2.0 + u * (n - 2.0)))[None, :]
    if model is ModelKind.SLOPE_ONLY:
        den = 2.0 * n * n * u * u + n * (7.0 * r - 1.0) * u + 6.0 * r * r
        w = 6.0 * u * u * idx
        w[0] = -6.0 * r
        w[-1] = 6.0 * ((n - 1.0) - r * (n - 2.0))
        return (w / den)[None, :]
    if model is ModelKind.INTERCEPT_SLOPE:
        t = mv_terms(params, np.zeros(n))
        scale = params.one_minus_rho_sq / t.det
        return np.vstack([
            scale * (t.m3 * w1 - t.m2 * w2),
            scale * (-t.m2 * w1 + t.m1 * w2),
        ])
    raise DomainError(f"unknown model {model!r}")


def reference_covariance(model: ModelKind, n: float, lam: float) -> np.ndarray:
    """Exact p x p estimator covariance from the closed-form moments."""
    if model is ModelKind.INTERCEPT_ONLY:
        return np.array([[exact_moment(Quantity.VAR_B0_INTERCEPT, n, lam)]])
    if model is ModelKind.SLOPE_ONLY:
        return np.array([[exact_moment(Quantity.VAR_B1_SLOPE, n, lam)]])
    v00 = exact_moment(Quantity.VAR_B0_FULL, n, lam)
    v11 = exact_moment(Quantity.VAR_B1_FULL, n, lam)
    c01 = exact_moment(Quantity.COV_FULL, n, lam)
    return np.array([[v00, c01], [c01, v11]])


def closed_form_fit(model: ModelKind, y: np.ndarray, n: int, lam: float) -> FitResult:
    """Fit one of the three models on the even grid by its closed form.

    The estimates come from the scalar contractions (not a matrix solve),
    and the covariance is filled from the exact second-moment formulas.
    """
    params = OuParams(float(n), lam)
    params.require_well_conditioned()
    n, y = _check_response(params, y)
    r = params.rho
    u = params.one_minus_rho

    if model is ModelKind.INTERCEPT_ONLY:
        mid = 0.0
        for i in range(1, n - 1):
            mid += y[i]
        b0 = (y[0] + u * mid + y[n - 1]) / (2.0 + u * (n - 2.0))
        estimates = np.array([b0])
    elif model is ModelKind.SLOPE_ONLY:
        # shares its denominator with the slope-only variance formula
        den = 2.0 * n * n * u * u + n * (7.0 * r - 1.0) * u + 6.0 * r * r
        mid_weighted = 0.0
        for i in range(1, n - 1):
            mid_weighted += i * y[i]
        num = 6.0 * (-r * y[0] + u * u * mid_weighted
                     + ((n - 1.0) - r * (n - 2.0)) * y[n - 1])
        estimates = np.array([num / den])
    elif model is ModelKind.INTERCEPT_SLOPE:
        t = mv_terms(params, y)
        scale = params.one_minus_rho_sq / t.det
        estimates = np.array([
            scale * (t.m3 * t.v1 - t.m2 * t.v2),
            scale * (-t.m2 * t.v1 + t.m1 * t.v2),
        ])
    else:
        raise DomainError(f"unknown model {model!r}")

    return FitResult(
        estimates=estimates,
        covariance=reference_covariance(model, float(n), lam),
        model=model,
        params=params,
    )

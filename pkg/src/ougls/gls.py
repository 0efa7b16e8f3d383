"""Generic GLS machinery for arbitrary designs and covariances.

This is the matrix route to the same estimator the closed forms produce:
minimize the weighted quadratic (y - X b)' Sigma^-1 (y - X b), giving
b = (X' Sigma^-1 X)^-1 X' Sigma^-1 y with covariance (X' Sigma^-1 X)^-1.
Sigma is never inverted explicitly; everything goes through a Cholesky
factorization and triangular solves.  It doubles as the independent
oracle for every closed form in this package and as the fitting path for
uneven time grids.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import ConditioningError, DomainError
from .models import FitResult

__all__ = ["GlsProblem", "gls_fit", "weighted_rss"]

# A normal-equations Cholesky pivot below this fraction of the largest
# pivot marks the design as rank-deficient.
RANK_PIVOT_RTOL = 1e-10


@dataclass(frozen=True)
class GlsProblem:
    """Design (n x p), covariance (n x n) and response (length n)."""

    design: np.ndarray
    covariance: np.ndarray
    response: np.ndarray

    def __post_init__(self) -> None:
        x = np.atleast_2d(np.asarray(self.design, dtype=np.float64))
        s = np.asarray(self.covariance, dtype=np.float64)
        y = np.asarray(self.response, dtype=np.float64)
        if x.ndim != 2:
            raise DomainError("design must be a 2-D matrix")
        n, p = x.shape
        if n < p or p < 1:
            raise DomainError(f"design shape {x.shape} has fewer rows than columns")
        if s.shape != (n, n):
            raise DomainError(f"covariance shape {s.shape} does not match n = {n}")
        if y.shape != (n,):
            raise DomainError(f"response shape {y.shape} does not match n = {n}")
        if not np.allclose(s, s.T, rtol=0.0, atol=1e-12):
            raise DomainError("covariance must be symmetric")
        object.__setattr__(self, "design", x)
        object.__setattr__(self, "covariance", s)
        object.__setattr__(self, "response", y)


def _chol_covariance(problem: GlsProblem) -> np.ndarray:
    try:
        return scipy.linalg.cholesky(problem.covariance, lower=True)
    except scipy.linalg.LinAlgError as exc:
        raise ConditioningError(f"covariance is not positive definite: {exc}") from exc


def gls_fit(problem: GlsProblem, precision: np.ndarray | None = None) -> FitResult:
    """Solve the GLS problem via factorizations.

    The default path whitens the design and response with the Cholesky
    factor of the covariance.  Passing a precomputed precision matrix
    (for instance the closed-form tridiagonal inverse on the even grid)
    skips the whitening and forms the normal equations directly; both
    routes agree to well under 1e-9 and a test pins that.
    """
    x = problem.design
    y = problem.response
    if precision is None:
        low = _chol_covariance(problem)
        xw = scipy.linalg.solve_triangular(low, x, lower=True)
        yw = scipy.linalg.solve_triangular(low, y, lower=True)
        gram = xw.T @ xw
        rhs = xw.T @ yw
    else:
        precision = np.asarray(precision, dtype=np.float64)
        if precision.shape != problem.covariance.shape:
            raise DomainError("precision shape does not match the covariance")
        px = precision @ x
        gram = x.T @ px
        rhs = px.T @ y

    try:
        factor = scipy.linalg.cho_factor(gram, lower=True)
    except scipy.linalg.LinAlgError as exc:
        raise ConditioningError(f"normal equations are singular: {exc}") from exc
    pivots = np.abs(np.diag(factor[0]))
    if pivots.min() < RANK_PIVOT_RTOL * pivots.max():
        raise ConditioningError(
            f"design is rank-deficient (pivot ratio {pivots.min() / pivots.max():.2e})"
        )

    estimates = scipy.linalg.cho_solve(factor, rhs)
    cov = scipy.linalg.cho_solve(factor, np.eye(gram.shape[0]))
    cov = 0.5 * (cov + cov.T)
    return FitResult(estimates=estimates, covariance=cov)


def weighted_rss(problem: GlsProblem, beta: np.ndarray) -> float:
    """The quadratic objective (y - X b)' Sigma^-1 (y - X b).

    Exactly zero when y = X b; the fitted estimates minimize it.
    """
    beta = np.asarray(beta, dtype=np.float64)
    if beta.shape != (problem.design.shape[1],):
        raise DomainError(
            f"beta shape {beta.shape} does not match p = {problem.design.shape[1]}"
        )
    resid = problem.response - problem.design @ beta
    low = _chol_covariance(problem)
    z = scipy.linalg.solve_triangular(low, resid, lower=True)
    return float(z @ z)

"""Exact second moments of the GLS estimators and their asymptotics.

Five quantities are tracked: the intercept-only variance, the slope-only
variance, and the variance pair plus covariance of the two-parameter model.
For each one this module provides the exact closed form in (n, lam), its
n -> infinity limit, its derivative in n (with the quotient-rule parts
exposed), the location of the limit curve's extremum, the lam -> infinity
bound, and two diminishing-return scans.

Every formula is written in terms of u = 1 - rho (computed via expm1) so
that the small-exponent regime lam/(n-1) -> 0 keeps full precision; the
raw polynomials in rho suffer total cancellation there.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .covariance import OuParams
from .errors import DomainError, ScanLimitError

__all__ = [
    "Quantity",
    "KneeResult",
    "QuotientParts",
    "exact_moment",
    "moment_limit",
    "moment_derivative_n",
    "quotient_parts",
    "lambda_knee",
    "asymptote_extremum",
    "lambda_infinity_bound",
    "n_diminishing_return",
]

KNEE_SCAN_LIMIT = 1e4
NSTAR_SCAN_LIMIT = 10**6


class Quantity(enum.Enum):
    """One of the five estimator second moments."""

    VAR_B0_INTERCEPT = "var-b0-intercept"
    VAR_B1_SLOPE = "var-b1-slope"
    VAR_B0_FULL = "var-b0-full"
    VAR_B1_FULL = "var-b1-full"
    COV_FULL = "cov-full"


#: Quantities whose limit curve decreases monotonically in lam (no extremum).
MONOTONE = frozenset({Quantity.VAR_B0_INTERCEPT, Quantity.VAR_B0_FULL})


@dataclass(frozen=True)
class KneeResult:
    """Outcome of a diminishing-return scan over the limit curve.

    lambda_star is the first grid point whose incoming step changed the
    curve by less than tol (in absolute value).
    """

    lambda_star: float
    scan_start: float
    step: float
    tol: float


@dataclass(frozen=True)
class QuotientParts:
    """Numerator e1, denominator e3 and their n-derivatives e2, e4.

    The moment equals e1/e3 and its derivative (e3*e2 - e4*e1)/e3^2.
    """

    e1: float
    e2: float
    e3: float
    e4: float

    @property
    def derivative(self) -> float:
        return (self.e3 * self.e2 - self.e4 * self.e1) / (self.e3 * self.e3)


def _phi(y: float) -> float:
    """1 - (1 + y) exp(-y), accurate near zero.

    The two-term difference loses a factor of y in precision, so small
    arguments use the series y^2/2 - y^3/3 + y^4/8 - y^5/30 + y^6/144.
    """
    if y < 1e-2:
        return y * y * (0.5 - y * (1.0 / 3.0 - y * (0.125 - y * (1.0 / 30.0 - y / 144.0))))
    return -math.expm1(-y) - y * math.exp(-y)


# --- exact moments -----------------------------------------------------------
#
# Shared building blocks, all positive for rho in (0, 1):
#   slope_quad  = 2 n^2 u^2 + n (7 rho - 1) u + 6 rho^2      (slope-only denominator;
#                    also the bracket of the full-model intercept numerator)
#   full_quad   = n^2 u^2 + n (1 + 5 rho) u + 6 rho (1 + rho) (full-model denominator)
#   level_lin   = n u + 2 rho                                 (intercept-only denominator)


def _slope_quad(n: float, r: float, u: float) -> float:
    return 2.0 * n * n * u * u + n * (7.0 * r - 1.0) * u + 6.0 * r * r


def _full_quad(n: float, r: float, u: float) -> float:
    return n * n * u * u + n * (1.0 + 5.0 * r) * u + 6.0 * r * (1.0 + r)


def _moment_from_rho(q: Quantity, n: float, r: float, u: float) -> float:
    if q is Quantity.VAR_B0_INTERCEPT:
        return (1.0 + r) / (n * u + 2.0 * r)
    if q is Quantity.VAR_B1_SLOPE:
        return 6.0 * u * (1.0 + r) * (n - 1.0) / _slope_quad(n, r, u)
    if q is Quantity.VAR_B0_FULL:
        num = 2.0 * (1.0 + r) * _slope_quad(n, r, u)
        den = (n * u + 2.0 * r) * _full_quad(n, r, u)
        return num / den
    if q is Quantity.VAR_B1_FULL:
        return 12.0 * u * (1.0 + r) * (n - 1.0) / _full_quad(n, r, u)
    if q is Quantity.COV_FULL:
        return -0.5 * _moment_from_rho(Quantity.VAR_B1_FULL, n, r, u)
    raise DomainError(f"unknown quantity {q!r}")


def exact_moment(q: Quantity, n: float, lam: float) -> float:
    """Exact variance (or covariance) of the estimator at sample size n.

    n is treated as a continuous real >= 2 with rho = exp(-lam/(n-1)).
    """
    p = OuParams(n, lam)
    p.require_well_conditioned()
    return _moment_from_rho(q, p.n, p.rho, p.one_minus_rho)


def moment_limit(q: Quantity, lam: float) -> float:
    """The n -> infinity limit of exact_moment; positive lam only.

    The limits are rational in lam: 2/(lam+2) for the intercept-only
    variance, 12 lam/(2 lam^2 + 6 lam + 6) for the slope-only variance,
    8(lam^2+3lam+3)/((lam+2)(lam^2+6lam+12)) and 24 lam/(lam^2+6lam+12)
    for the full model, and minus half the latter for the covariance.
    """
    if not (isinstance(lam, (int, float)) and math.isfinite(lam) and lam > 0):
        raise DomainError(f"decay rate must be a positive real, got {lam!r}")
    if q is Quantity.VAR_B0_INTERCEPT:
        return 2.0 / (lam + 2.0)
    if q is Quantity.VAR_B1_SLOPE:
        return 12.0 * lam / (2.0 * lam * lam + 6.0 * lam + 6.0)
    if q is Quantity.VAR_B0_FULL:
        return (8.0 * (lam * lam + 3.0 * lam + 3.0)
                / ((lam + 2.0) * (lam * lam + 6.0 * lam + 12.0)))
    if q is Quantity.VAR_B1_FULL:
        return 24.0 * lam / (lam * lam + 6.0 * lam + 12.0)
    if q is Quantity.COV_FULL:
        return -12.0 * lam / (lam * lam + 6.0 * lam + 12.0)
    raise DomainError(f"unknown quantity {q!r}")


# --- derivatives in n --------------------------------------------------------


def quotient_parts(q: Quantity, n: float, lam: float) -> QuotientParts:
    """Quotient-rule components of d/dn exact_moment, n continuous > 2.

    e1 and e3 are the moment's numerator and denominator; e2 and e4 their
    derivatives in n, with d rho/dn = lam rho/(n-1)^2.
    """
    if not (isinstance(n, (int, float)) and math.isfinite(n) and n > 2):
        raise DomainError(f"derivative requires real n > 2, got {n!r}")
    p = OuParams(n, lam)
    p.require_well_conditioned()
    n = p.n
    r = p.rho
    u = p.one_minus_rho
    rp = lam * r / ((n - 1.0) ** 2)  # d rho / d n

    if q is Quantity.VAR_B0_INTERCEPT:
        return QuotientParts(
            e1=1.0 + r,
            e2=rp,
            e3=n * u + 2.0 * r,
            e4=u - (n - 2.0) * rp,
        )

    # d/dn of full_quad(n, rho(n), u(n)); shared by three quantities below
    d_full_quad = (
        2.0 * n * u * u - 2.0 * n * n * u * rp
        + (1.0 + 5.0 * r) * u + n * rp * (5.0 * u - (1.0 + 5.0 * r))
        + 6.0 * rp * (1.0 + 2.0 * r)
    )

    if q is Quantity.VAR_B1_SLOPE:
        return QuotientParts(
            e1=6.0 * u * (1.0 + r) * (n - 1.0),
            e2=6.0 * _phi(2.0 * lam / (n - 1.0)),
            e3=_slope_quad(n, r, u),
            e4=(u * (4.0 * n * u + 7.0 * r - 1.0)
                + rp * (-4.0 * n * n * u + 8.0 * n + 12.0 * r - 14.0 * n * r)),
        )
    if q is Quantity.VAR_B0_FULL:
        a = _slope_quad(n, r, u)
        da = (4.0 * n * u * u - 4.0 * n * n * u * rp
              + (7.0 * r - 1.0) * u + n * rp * (7.0 * u - (7.0 * r - 1.0))
              + 12.0 * r * rp)
        b = n * u + 2.0 * r
        db = u - (n - 2.0) * rp
        f = _full_quad(n, r, u)
        return QuotientParts(
            e1=2.0 * (1.0 + r) * a,
            e2=2.0 * rp * a + 2.0 * (1.0 + r) * da,
            e3=b * f,
            e4=db * f + b * d_full_quad,
        )
    if q is Quantity.VAR_B1_FULL:
        return QuotientParts(
            e1=12.0 * u * (1.0 + r) * (n - 1.0),
            e2=12.0 * _phi(2.0 * lam / (n - 1.0)),
            e3=_full_quad(n, r, u),
            e4=d_full_quad,
        )
    if q is Quantity.COV_FULL:
        parts = quotient_parts(Quantity.VAR_B1_FULL, n, lam)
        return QuotientParts(e1=-0.5 * parts.e1, e2=-0.5 * parts.e2,
                             e3=parts.e3, e4=parts.e4)
    raise DomainError(f"unknown quantity {q!r}")


def moment_derivative_n(q: Quantity, n: float, lam: float) -> float:
    """Closed-form d/dn of exact_moment (negative for the four variances)."""
    return quotient_parts(q, n, lam).derivative


# --- limit-curve geometry ----------------------------------------------------


def asymptote_extremum(q: Quantity) -> tuple[float, float]:
    """Location and value of the limit curve's extremum.

    Only the three non-monotone quantities have one: the slope-only limit
    peaks at lam = sqrt(3), the full-model slope limit at sqrt(12), and
    the covariance limit bottoms out at sqrt(12).
    """
    if q in MONOTONE:
        raise DomainError(f"{q.value} has a monotone limit curve: no extremum")
    lam = math.sqrt(3.0) if q is Quantity.VAR_B1_SLOPE else math.sqrt(12.0)
    return lam, moment_limit(q, lam)


def lambda_knee(q: Quantity, step: float = 0.1, tol: float = 1e-4) -> KneeResult:
    """First lam-grid point where the limit curve's per-step change < tol.

    The scan walks lam = start, start+step, ... and returns the first
    point whose change relative to the previous point is below tol in
    absolute value.  For the non-monotone quantities the scan starts at
    the first grid point strictly above the extremum, so the flat top of
    the curve cannot trigger the criterion; for the monotone quantities
    it starts at lam = step.
    """
    if step <= 0 or tol <= 0:
        raise DomainError("step and tol must be positive")
    if q in MONOTONE:
        start_idx = 1
    else:
        ext, _ = asymptote_extremum(q)
        start_idx = math.floor(ext / step) + 1
    start = round(start_idx * step, 12)
    prev = moment_limit(q, start)
    k = 1
    while True:
        lam = round((start_idx + k) * step, 12)
        if lam > KNEE_SCAN_LIMIT:
            raise ScanLimitError(f"knee scan for {q.value} exceeded {KNEE_SCAN_LIMIT:g}")
        cur = moment_limit(q, lam)
        if abs(cur - prev) < tol:
            return KneeResult(lambda_star=lam, scan_start=start, step=step, tol=tol)
        prev = cur
        k += 1


def lambda_infinity_bound(q: Quantity, n: float) -> float:
    """Value of exact_moment as lam -> infinity, i.e. with rho forced to 0.

    1/n for the intercept-only variance, 6(n-1)/(2n^2-n) for the
    slope-only variance, (4n-2)/(n^2+n), 12(n-1)/(n^2+n) and
    -6(n-1)/(n^2+n) for the full model.
    """
    if not (isinstance(n, (int, float)) and math.isfinite(n) and n >= 2):
        raise DomainError(f"sample size must be a real number >= 2, got {n!r}")
    return _moment_from_rho(q, float(n), 0.0, 1.0)


def n_diminishing_return(q: Quantity, lam: float, eps: float = 1e-4,
                         criterion: str = "derivative") -> int:
    """Smallest integer n >= 3 at which growing the sample stops paying.

    criterion "derivative" (default): |d/dn exact_moment| < eps.
    criterion "difference": |exact_moment(n+1) - exact_moment(n)| < eps.
    The scan is bounded at one million.
    """
    if eps <= 0:
        raise DomainError("eps must be positive")
    if criterion not in ("derivative", "difference"):
        raise DomainError(f"criterion must be 'derivative' or 'difference', got {criterion!r}")
    n = 3
    while n <= NSTAR_SCAN_LIMIT:
        if criterion == "derivative":
            done = abs(moment_derivative_n(q, n, lam)) < eps
        else:
            done = abs(exact_moment(q, n + 1, lam) - exact_moment(q, n, lam)) < eps
        if done:
            return n
        n += 1
    raise ScanLimitError(
        f"no diminishing-return n below {NSTAR_SCAN_LIMIT} for {q.value} at lam={lam:g}"
    )

"""GLS regression with Ornstein-Uhlenbeck errors on the unit interval.

The observation model is y = X b + e on the even grid t_i = (i-1)/(n-1),
where e is a zero-mean, unit-variance Gaussian process with correlation
exp(-lam |t_i - t_j|), i.e. a lag-one autoregression with coefficient
rho = exp(-lam/(n-1)).  The package provides:

- the correlation structure and its closed-form tridiagonal inverse
  (:mod:`ougls.covariance`);
- the three standard designs (constant, line through the origin, constant
  plus line) with closed-form GLS estimates (:mod:`ougls.models`);
- generic factorization-based GLS for arbitrary designs and grids, used
  as the independent cross-check of every closed form (:mod:`ougls.gls`);
- exact estimator variances and covariance, their large-n limits,
  derivatives in n, limit-curve extrema and diminishing-return scans
  (:mod:`ougls.analysis`);
- a seed-deterministic Monte Carlo harness with a compiled kernel and a
  bit-identical pure-NumPy fallback (:mod:`ougls.simulate`);
- a CLI covering tables, curves, simulation and fitting (``ougls``).
"""

from .analysis import (
    KneeResult,
    Quantity,
    QuotientParts,
    asymptote_extremum,
    exact_moment,
    lambda_infinity_bound,
    lambda_knee,
    moment_derivative_n,
    moment_limit,
    n_diminishing_return,
    quotient_parts,
)
from .covariance import (
    OuParams,
    TimeGrid,
    one_minus_rho,
    rho,
    sigma_even,
    sigma_general,
    sigma_inverse_even,
)
from .errors import ConditioningError, DomainError, NumericError, ScanLimitError
from .gls import GlsProblem, gls_fit, weighted_rss
from .models import (
    FitResult,
    ModelKind,
    MvTerms,
    closed_form_fit,
    closed_form_weights,
    design_matrix,
    mv_terms,
    reference_covariance,
)
from .simulate import (
    HAVE_COMPILED,
    McReport,
    SimSpec,
    run_monte_carlo,
    sample_ou_errors,
    sample_ou_errors_general,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "ConditioningError",
    "DomainError",
    "NumericError",
    "ScanLimitError",
    "OuParams",
    "TimeGrid",
    "rho",
    "one_minus_rho",
    "sigma_even",
    "sigma_inverse_even",
    "sigma_general",
    "ModelKind",
    "MvTerms",
    "FitResult",
    "design_matrix",
    "mv_terms",
    "closed_form_weights",
    "closed_form_fit",
    "reference_covariance",
    "GlsProblem",
    "gls_fit",
    "weighted_rss",
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
    "HAVE_COMPILED",
    "SimSpec",
    "McReport",
    "run_monte_carlo",
    "sample_ou_errors",
    "sample_ou_errors_general",
]

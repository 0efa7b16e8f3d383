"""Exception hierarchy.

DomainError covers invalid inputs (bad parameter ranges, malformed grids,
dimension mismatches).  NumericError covers failures of otherwise valid
inputs: near-singular correlation, non-positive-definite covariance,
rank-deficient designs, exhausted scans.  The CLI maps DomainError to exit
code 2 and NumericError to exit code 3.
"""


class DomainError(ValueError):
    """Input outside the valid parameter domain."""


class NumericError(ArithmeticError):
    """Numerical failure on otherwise valid input."""


class ConditioningError(NumericError):
    """Correlation too close to 1, or a factorization found the problem singular."""


class ScanLimitError(NumericError):
    """A bounded scan reached its guard limit without meeting its criterion."""

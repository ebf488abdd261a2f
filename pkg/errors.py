"""Exception hierarchy shared by the library modules and the command line.

Every error carries the process exit code the CLI reports for it.
"""


class CasimirError(Exception):
    exit_code = 1


class DomainError(CasimirError, ValueError):
    """An input lies outside the domain of the operation."""
    exit_code = 2


class ConfigError(DomainError):
    """An environment setting could not be interpreted."""


class NumericalError(CasimirError):
    exit_code = 3


class ConvergenceError(NumericalError):
    """
    Adaptive quadrature or a series ran out of budget.

    Args:
        message (str): What failed to converge
        best_estimate (float): Value reached before giving up
        error_estimate (float): Error estimate attached to that value
    """

    def __init__(self, message, best_estimate=float("nan"), error_estimate=float("inf")):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate


class EvaluationError(NumericalError):
    """An integrand returned NaN or an infinity."""


class SuppressedEnsembleError(NumericalError):
    """Every species of an ensemble underflowed, so ratios are undefined."""

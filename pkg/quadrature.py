"""
Adaptive one-dimensional integration on finite and semi-infinite intervals.

Both entry points run QUADPACK's globally adaptive Gauss-Kronrod scheme
(scipy.integrate.quad), which bisects the worst subinterval first and
extrapolates, so integrable endpoint singularities converge without special
nodes. Semi-infinite intervals are mapped onto [0, 1) by y = lo + t/(1 - t)
instead of being truncated.
"""
import math
import logging
from typing import Callable

from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy.integrate import quad

from errors import ConvergenceError, EvaluationError, DomainError

logger = logging.getLogger(__name__)

Integrand = Callable[[float], float]

SUBDIVISION_LIMIT = 200
# round-off limited results are kept when within this factor of the target
ROUNDOFF_SLACK = 1000.0


class Tolerance(BaseModel):
    """Requested accuracy: |error| <= max(abs, rel * |integral|)."""
    model_config = ConfigDict(frozen=True)

    rel: float = Field(1e-10, gt=0, lt=1, description="Relative tolerance.")
    abs: float = Field(1e-30, gt=0, allow_inf_nan=False, description="Absolute tolerance.")

    def target(self, value: float) -> float:
        return max(self.abs, self.rel * abs(value))

    def tightened(self, factor: float, floor: float = 5e-14) -> "Tolerance":
        """A stricter tolerance for integrals nested inside another one."""
        return Tolerance(rel=max(self.rel / factor, floor), abs=self.abs)


DEFAULT_TOLERANCE = Tolerance()


class QuadratureResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float
    error_estimate: float = Field(..., ge=0)
    evaluations: int = Field(..., ge=1)

    @model_validator(mode="after")
    def _finite(self):
        if math.isnan(self.value):
            raise ValueError("quadrature value is NaN")
        return self


def _guarded(f: Integrand) -> Integrand:
    def evaluate(x):
        y = f(x)
        if not math.isfinite(y):
            raise EvaluationError(f"integrand returned {y!r} at x = {x!r}")
        return y
    return evaluate


def _run(f: Integrand, lo: float, hi: float, tol: Tolerance, limit: int) -> QuadratureResult:
    value, error, info, *failure = quad(
        _guarded(f), lo, hi,
        epsabs=tol.abs, epsrel=tol.rel, limit=limit, full_output=1,
    )
    evaluations = int(info["neval"])
    error = abs(error)
    if failure:
        message = str(failure[0])
        roundoff_limited = "roundoff" in message.lower()
        if roundoff_limited and error <= ROUNDOFF_SLACK * tol.target(value):
            logger.warning("accepting round-off limited quadrature on [%g, %g]: value=%.17g error=%.3g",
                           lo, hi, value, error)
        else:
            raise ConvergenceError(
                f"quadrature on [{lo}, {hi}] did not converge: {message}",
                best_estimate=value, error_estimate=error,
            )
    logger.debug("quad [%g, %g]: value=%.17g error=%.3g evaluations=%d", lo, hi, value, error, evaluations)
    return QuadratureResult(value=value, error_estimate=error, evaluations=evaluations)


def integrate_finite(f: Integrand, lo: float, hi: float,
                     tol: Tolerance = DEFAULT_TOLERANCE,
                     limit: int = SUBDIVISION_LIMIT) -> QuadratureResult:
    """
    Integrate f over the finite interval [lo, hi].

    Args:
        f (callable): Integrand, finite on the open interval
        lo (float): Lower limit
        hi (float): Upper limit, strictly above lo
        tol (Tolerance): Requested accuracy
        limit (int): Subdivision budget

    Returns:
        QuadratureResult: Value, error estimate and number of evaluations

    Raises:
        ConvergenceError: The subdivision budget ran out; carries the best estimate
        EvaluationError: The integrand returned NaN or an infinity
    """
    lo, hi = float(lo), float(hi)
    if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
        raise DomainError(f"finite interval needs lo < hi, got [{lo}, {hi}]")
    return _run(f, lo, hi, tol, limit)


def integrate_semi_infinite(f: Integrand, lo: float,
                            tol: Tolerance = DEFAULT_TOLERANCE,
                            limit: int = SUBDIVISION_LIMIT) -> QuadratureResult:
    """
    Integrate f over [lo, inf) after the map y = lo + t/(1 - t), t in [0, 1).

    f must decay at least exponentially; every integrand in this project
    carries a 1/(e^y - 1) or e^-y factor.
    """
    lo = float(lo)
    if not math.isfinite(lo):
        raise DomainError(f"semi-infinite interval needs a finite lower limit, got {lo}")

    def mapped(t):
        s = 1.0 - t
        if s <= 0.0:
            return 0.0
        y = f(lo + t / s)
        if y == 0.0:
            return 0.0
        return y / (s * s)

    return _run(mapped, 0.0, 1.0, tol, limit)

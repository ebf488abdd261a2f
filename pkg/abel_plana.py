"""
Numerical check of the Abel-Plana summation formula

    sum_{n>=0} f(n) = int_0^inf f(t) dt + f(0)/2
                      + i int_0^inf [f(it) - f(-it)] / (e^(2 pi t) - 1) dt

on test functions whose sums are known in closed form. The integral pieces
are computed by quadrature, so the residual exercises the same engine the
Casimir integrals run on.
"""
import math
from typing import ClassVar

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from errors import DomainError
from quadrature import Tolerance, integrate_semi_infinite

CHECK_TOLERANCE = Tolerance(rel=1e-12, abs=1e-30)


def _inverse_bose_2pi(t: float) -> float:
    """1 / (e^(2 pi t) - 1) without overflow."""
    x = 2.0 * math.pi * t
    return math.exp(-x) / -math.expm1(-x)


class ExponentialFamily(BaseModel):
    """f(t) = e^(-alpha t)."""
    model_config = ConfigDict(frozen=True)

    smooth_correction: ClassVar[bool] = True

    alpha: float = Field(1.0, gt=0, allow_inf_nan=False)

    def f(self, t: float) -> float:
        return math.exp(-self.alpha * t)

    def exact_sum(self) -> float:
        return -1.0 / math.expm1(-self.alpha)

    def axis_difference(self, t: float) -> float:
        """i [f(it) - f(-it)] = 2 sin(alpha t)."""
        return 2.0 * math.sin(self.alpha * t)

    def pole_terms(self) -> float:
        return 0.0


class LorentzianFamily(BaseModel):
    """
    f(t) = 1 / (t^2 + beta^2).

    f(it) = f(-it) off the poles, so the correction integrand vanishes except
    at the poles t = beta on the imaginary axis. Approaching the axis from
    the right half-plane, the difference tends to pi/beta delta(t - beta),
    leaving the single term pi / (beta (e^(2 pi beta) - 1)).
    """
    model_config = ConfigDict(frozen=True)

    smooth_correction: ClassVar[bool] = False

    beta: float = Field(1.0, gt=0, allow_inf_nan=False)

    def f(self, t: float) -> float:
        return 1.0 / (t * t + self.beta ** 2)

    def exact_sum(self) -> float:
        b = self.beta
        return 1.0 / (2.0 * b * b) + math.pi / (2.0 * b * math.tanh(math.pi * b))

    def axis_difference(self, t: float) -> float:
        return 0.0

    def pole_terms(self) -> float:
        return math.pi / self.beta * _inverse_bose_2pi(self.beta)


FAMILIES = {
    "exponential": ExponentialFamily,
    "lorentzian": LorentzianFamily,
}

BUILTIN_CHECKS = (
    ("exponential", {"alpha": 1.0}),
    ("lorentzian", {"beta": 1.0}),
    ("exponential", {"alpha": 2.0}),
)


class AbelPlanaTerms(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: str
    exact_sum: float
    integral: float
    boundary: float
    correction: float

    @property
    def residual(self) -> float:
        return abs(self.exact_sum - self.integral - self.boundary - self.correction)


def make_family(family: str, **params):
    if family not in FAMILIES:
        raise DomainError(f"unsupported test function family {family!r}; choose from {', '.join(FAMILIES)}")
    try:
        return FAMILIES[family](**params)
    except ValidationError as e:
        raise DomainError(f"bad parameters for {family}: {e.errors()[0].get('msg')}") from None


def abel_plana_terms(family: str, tol: Tolerance = CHECK_TOLERANCE, **params) -> AbelPlanaTerms:
    """Every piece of the identity for one member of a built-in family."""
    fn = make_family(family, **params)
    integral = integrate_semi_infinite(fn.f, 0.0, tol).value

    def correction_integrand(t):
        return fn.axis_difference(t) * _inverse_bose_2pi(t)

    smooth = 0.0
    if fn.smooth_correction:
        smooth = integrate_semi_infinite(correction_integrand, 0.0, tol).value
    return AbelPlanaTerms(
        family=family,
        exact_sum=fn.exact_sum(),
        integral=integral,
        boundary=0.5 * fn.f(0.0),
        correction=smooth + fn.pole_terms(),
    )


def abel_plana_residual(family: str, tol: Tolerance = CHECK_TOLERANCE, **params) -> float:
    """
    |sum - integral - f(0)/2 - correction| for a built-in test function.

    Args:
        family (str): "exponential" (alpha) or "lorentzian" (beta)
        tol (Tolerance): Quadrature tolerance for the integral pieces

    Returns:
        float: Absolute residual of the identity
    """
    return abel_plana_terms(family, tol, **params).residual

"""
Mass-dependent Casimir force and renormalized vacuum energy per unit plate
area for a scalar field of mass m between perfect parallel plates a apart.

The force is

    F(a, m) = -1/(4 pi^2 a^2) int_0^inf k dk int_mu^inf dy
              [ mu^2 / ((e^y - 1) sqrt(y^2 - mu^2)) + sqrt(y^2 - mu^2) / (e^y - 1) ]

with mu = 2a sqrt(m^2 + k^2). The mode sum runs over n in (-inf, inf), so
the massless limit is the two-polarization value -pi^2 / (240 a^4). All
operations return negative (attractive) values.

Several independent paths compute F; each lives in a ``*_method.py`` module
exporting a ``Method`` class with the same interface, discovered at runtime
by :func:`available_methods`:

    reduced-integral      F = -G(2am) / (16 pi^2 a^4),  G(x0) = int_x0^inf u J(u) du
    direct-eq4            the nested double integral with its raw endpoint singularity
    bessel-series         |F| = m^2/(4 pi^2 a^2) sum_n [2ma K1(2nma)/n + 3 K2(2nma)/n^2]
    massless-closed-form  -pi^2 / (240 a^4)

Inner integrals are evaluated in the cosh-substituted form y = mu cosh t,
which removes the (y - mu)^(-1/2) endpoint, and in scaled form e^mu J(mu) so
relative accuracy survives until 2am reaches the underflow threshold.
"""
import math
import logging
import importlib
from functools import lru_cache
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from errors import DomainError, NumericalError
from quadrature import DEFAULT_TOLERANCE, QuadratureResult, Tolerance, integrate_semi_infinite
from units import (
    EnergyPerArea, ForcePerArea, ParticleMass, PlateSeparation,
    force_per_area, require_mass, require_separation,
)

logger = logging.getLogger(__name__)

PI2 = math.pi ** 2
ZETA2 = PI2 / 6.0
G_MASSLESS = math.pi ** 4 / 15.0
# beyond this gap e^-2am underflows double precision
UNDERFLOW_GAP = 700.0
# cosh(t) overflows near t = 710; the integrands vanish long before
MAX_RAPIDITY = 700.0
# below this gap J and H differ from pi^2/6 by less than double precision
SMALL_GAP = 1e-16

MethodName = Literal["reduced-integral", "direct-eq4", "bessel-series", "massless-closed-form"]


class DimensionlessGap(BaseModel):
    """mu = 2a sqrt(m^2 + k_perp^2) together with its zero-momentum value x0 = 2am."""
    model_config = ConfigDict(frozen=True)

    mu: float = Field(..., ge=0, allow_inf_nan=False)
    x0: float = Field(0.0, ge=0, allow_inf_nan=False)

    @model_validator(mode="after")
    def _ordered(self):
        # allow for rounding in sqrt(x0^2 + kappa^2)
        if self.mu < self.x0 * (1 - 1e-15):
            raise ValueError(f"mu = {self.mu} lies below x0 = 2am = {self.x0}")
        return self

    @classmethod
    def of(cls, a: float, m: float, k_perp: float = 0.0) -> "DimensionlessGap":
        a = require_separation(a).value
        m = require_mass(m).value
        if not math.isfinite(k_perp) or k_perp < 0:
            raise DomainError(f"transverse momentum must be non-negative, got {k_perp!r}")
        return cls(mu=2.0 * a * math.hypot(m, k_perp), x0=2.0 * a * m)


class ModeSpectrum(BaseModel):
    """Standing-wave modes sin(k_n z) between the plates, k_n = n pi / a."""
    model_config = ConfigDict(frozen=True)

    a: PlateSeparation
    m: ParticleMass

    @classmethod
    def of(cls, a: float, m: float) -> "ModeSpectrum":
        return cls(a=require_separation(a), m=require_mass(m))

    def wavenumber(self, n: int) -> float:
        return n * math.pi / self.a.value

    def frequency(self, n: int, k_perp: float = 0.0) -> float:
        """omega_n = sqrt(m^2 + k_perp^2 + k_n^2)."""
        return math.sqrt(self.m.value ** 2 + k_perp ** 2 + self.wavenumber(n) ** 2)

    def lowest_frequency(self, k_perp: float = 0.0) -> float:
        """omega_0 = sqrt(m^2 + k_perp^2)."""
        return math.hypot(self.m.value, k_perp)

    def gap(self, k_perp: float = 0.0) -> DimensionlessGap:
        return DimensionlessGap(mu=2.0 * self.a.value * self.lowest_frequency(k_perp),
                                x0=2.0 * self.a.value * self.m.value)


class ForceResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    force: ForcePerArea
    method: MethodName
    error_estimate: float = Field(0.0, ge=0)
    status: Literal["ok", "underflow"] = "ok"
    a: float = Field(..., gt=0, description="Plate distance in MeV^-1.")
    mass: float = Field(..., ge=0, description="Mass in MeV.")

    @property
    def magnitude(self) -> float:
        return self.force.magnitude

    @classmethod
    def underflow(cls, a: float, m: float, method: MethodName) -> "ForceResult":
        logger.warning("2am = %.6g exceeds %g: force underflows, reporting exact zero", 2 * a * m, UNDERFLOW_GAP)
        return cls(force=ForcePerArea(value=0.0), method=method, status="underflow", a=a, mass=m)


def gap_underflows(a: float, m: float) -> bool:
    return 2.0 * a * m > UNDERFLOW_GAP


### Inner integrals ###

def _bose(x: float) -> float:
    """1 / (1 - e^-x), finite for every x > 0."""
    return -1.0 / math.expm1(-x)


def _small_gap_result(mu: float) -> QuadratureResult:
    return QuadratureResult(value=ZETA2, error_estimate=ZETA2 * mu, evaluations=1)


def _as_mu(mu) -> float:
    if isinstance(mu, DimensionlessGap):
        return mu.mu
    mu = float(mu)
    if not math.isfinite(mu) or mu < 0:
        raise DomainError(f"dimensionless gap must be non-negative, got {mu!r}")
    return mu


def inner_j_scaled(mu: float, tol: Tolerance = DEFAULT_TOLERANCE) -> QuadratureResult:
    """
    e^mu J(mu) with J(mu) = int_0^inf mu^2 cosh^2 t / (e^(mu cosh t) - 1) dt.

    The factor e^-mu is taken out of the Bose weight as e^(-mu (cosh t - 1)),
    using cosh t - 1 = 2 sinh^2(t/2).
    """
    if mu < SMALL_GAP:
        return _small_gap_result(mu)

    def integrand(t):
        if t > MAX_RAPIDITY:
            return 0.0
        damping = math.exp(-2.0 * mu * math.sinh(0.5 * t) ** 2)
        if damping == 0.0:
            return 0.0
        c = math.cosh(t)
        return mu * mu * c * c * damping * _bose(mu * c)

    return integrate_semi_infinite(integrand, 0.0, tol)


def inner_j(mu, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """
    Inner integral of the force,
    J(mu) = int_mu^inf dy [ mu^2/((e^y - 1) sqrt(y^2 - mu^2)) + sqrt(y^2 - mu^2)/(e^y - 1) ].

    Strictly positive and decreasing; J(0) = pi^2/6.
    """
    mu = _as_mu(mu)
    return math.exp(-mu) * inner_j_scaled(mu, tol).value


def inner_h_scaled(mu: float, tol: Tolerance = DEFAULT_TOLERANCE) -> QuadratureResult:
    """e^mu H(mu) with H(mu) = int_0^inf mu^2 sinh^2 t / (e^(mu cosh t) - 1) dt."""
    if mu < SMALL_GAP:
        return _small_gap_result(mu)

    def integrand(t):
        if t > MAX_RAPIDITY:
            return 0.0
        damping = math.exp(-2.0 * mu * math.sinh(0.5 * t) ** 2)
        if damping == 0.0:
            return 0.0
        s = math.sinh(t)
        return mu * mu * s * s * damping * _bose(mu * math.cosh(t))

    return integrate_semi_infinite(integrand, 0.0, tol)


def inner_h(mu, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """Inner integral of the energy, H(mu) = int_mu^inf sqrt(y^2 - mu^2)/(e^y - 1) dy; H(0) = pi^2/6."""
    mu = _as_mu(mu)
    return math.exp(-mu) * inner_h_scaled(mu, tol).value


def _outer_scaled(inner, x0: float, tol: Tolerance) -> QuadratureResult:
    """e^x0 int_x0^inf u e^-u inner(u) du for a scaled inner integral."""
    inner_tol = tol.tightened(10.0)

    def integrand(u):
        weight = u * math.exp(x0 - u)
        if weight == 0.0:
            return 0.0
        return weight * inner(u, inner_tol).value

    return integrate_semi_infinite(integrand, x0, tol)


def reduced_g_scaled(x0: float, tol: Tolerance = DEFAULT_TOLERANCE) -> QuadratureResult:
    """e^x0 G(x0), the reduced one-dimensional force integral."""
    return _outer_scaled(inner_j_scaled, x0, tol)


def reduced_g(x0: float, tol: Tolerance = DEFAULT_TOLERANCE) -> float:
    """G(x0) = int_x0^inf u J(u) du; G(0) = pi^4/15 reproduces the massless force."""
    x0 = _as_mu(x0)
    if x0 == 0.0:
        return G_MASSLESS
    return math.exp(-x0) * reduced_g_scaled(x0, tol).value


def reduced_energy_scaled(x0: float, tol: Tolerance = DEFAULT_TOLERANCE) -> QuadratureResult:
    """e^x0 int_x0^inf u H(u) du; the massless value is pi^4/45."""
    return _outer_scaled(inner_h_scaled, x0, tol)


### Method discovery ###

def _is_valid_method(obj) -> bool:
    if obj is None:
        return False
    if not isinstance(getattr(obj, "name", None), str):
        return False
    if not callable(getattr(obj, "force", None)):
        return False
    return True


def _safe_get_method_instance(module):
    method_class = getattr(module, "Method", None)
    if method_class is None or not callable(method_class):
        return None
    try:
        inst = method_class()
    except Exception as e:
        logger.error("Error creating method from %s: %s", module.__name__, e)
        return None
    return inst if _is_valid_method(inst) else None


@lru_cache(maxsize=None)
def available_methods() -> dict:
    """
    Discover every ``*_method.py`` module next to this one.

    Returns:
        dict: Method name -> Method instance
    """
    methods = {}
    for path in sorted(Path(__file__).resolve().parent.glob("*_method.py")):
        module_name = path.stem
        try:
            module = importlib.import_module(module_name)
            method = _safe_get_method_instance(module)
            if method is None:
                raise AttributeError("Invalid Method implementation")
            methods[method.name] = method
        except Exception as e:
            logger.error("Error loading %s: %s", module_name, e)
    logger.debug("available force methods: %s", ", ".join(methods))
    return methods


def get_method(name: str):
    methods = available_methods()
    if name not in methods:
        raise DomainError(f"unknown force method {name!r}; available: {', '.join(sorted(methods))}")
    return methods[name]


def method_flags() -> dict:
    """CLI flag -> method name, for every method selectable from the command line."""
    return {m.flag: name for name, m in available_methods().items() if getattr(m, "flag", None)}


### Operations ###

def massless_force(a: float) -> ForceResult:
    """Closed form -pi^2 / (240 a^4), no quadrature."""
    return get_method("massless-closed-form").force(a, 0.0)


def force(a: float, m: float, tol: Tolerance = DEFAULT_TOLERANCE) -> ForceResult:
    """
    Attractive Casimir force per unit area via the reduced one-dimensional integral.

    Args:
        a (float): Plate distance in MeV^-1
        m (float): Mass in MeV; m = 0 returns the closed form
        tol (Tolerance): Quadrature tolerance

    Returns:
        ForceResult: Negative force in MeV^4 with its error estimate
    """
    if require_mass(m).value == 0.0:
        return massless_force(a)
    return get_method("reduced-integral").force(a, m, tol)


def force_eq4_direct(a: float, m: float, tol: Tolerance = DEFAULT_TOLERANCE) -> ForceResult:
    """The literal nested double integral, singular inner endpoint included; validates the reduction."""
    return get_method("direct-eq4").force(a, m, tol)


def force_bessel_series(a: float, m: float) -> ForceResult:
    """Resummed Bessel series of the force; m = 0 (or 2am < 1e-4) uses the closed form."""
    return get_method("bessel-series").force(a, m)


def compute_force(a: float, m: float, method: str = "integral",
                  tol: Tolerance = DEFAULT_TOLERANCE) -> ForceResult:
    """Dispatch by CLI flag (integral, bessel, direct) or by full method name."""
    flags = method_flags()
    name = flags.get(method, method)
    if name == "reduced-integral":
        return force(a, m, tol)
    if name == "bessel-series":
        return force_bessel_series(a, m)
    return get_method(name).force(a, m, tol)


def energy_renormalized(a: float, m: float, tol: Tolerance = DEFAULT_TOLERANCE) -> EnergyPerArea:
    """
    Finite, a-dependent part of the renormalized vacuum energy per unit area,
    E/S = -1/(16 pi^2 a^3) int_2am^inf u H(u) du.

    The -omega_0 pieces of the mode sum are a-independent and divergent; they
    drop out of the force and are not part of this value.
    """
    if require_mass(m).value == 0.0:
        return get_method("massless-closed-form").energy(a, 0.0)
    return get_method("reduced-integral").energy(a, m, tol)


def energy_bessel_series(a: float, m: float) -> EnergyPerArea:
    """E/S = -(m^2 / (4 pi^2 a)) sum_n K2(2nma) / n^2."""
    return get_method("bessel-series").energy(a, m)


def force_from_energy(a: float, m: float, tol: Tolerance = DEFAULT_TOLERANCE,
                      step: Optional[float] = None) -> ForcePerArea:
    """
    -d(E/S)/da by the five-point central difference of energy_renormalized.

    Args:
        step (float): Difference step in MeV^-1, default 1e-3 a
    """
    a = require_separation(a).value
    h = step if step is not None else 1e-3 * a
    if not 0 < 2 * h < a:
        raise DomainError(f"difference step {h!r} must be positive and below a/2")

    def e(x):
        return energy_renormalized(x, m, tol).value

    derivative = (-e(a + 2 * h) + 8 * e(a + h) - 8 * e(a - h) + e(a - 2 * h)) / (12 * h)
    if derivative < 0.0:
        raise NumericalError(f"energy decreases with distance at a = {a!r} (dE/da = {derivative!r}); the force would be repulsive")
    return force_per_area(-derivative)

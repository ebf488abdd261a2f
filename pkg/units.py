"""
Natural-unit value types (hbar = c = 1) and the few conversions the
command line needs between natural units, fm/MeV and SI.

Core math works in natural units only: lengths in MeV^-1, masses in MeV,
force per area in MeV^4, energy per area in MeV^3.
"""
import math

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from errors import DomainError, NumericalError

# CODATA value
HBAR_C_MEV_FM = 197.3269804
MEV_PER_FM3_IN_PASCAL = 1.6021766e32
MEV_PER_FM2_IN_JOULE_PER_M2 = 1.6021766e17
MEV_PER_GEV = 1000.0


class PlateSeparation(BaseModel):
    """Plate distance a in natural length units (MeV^-1)."""
    model_config = ConfigDict(frozen=True)

    value: float = Field(..., gt=0, allow_inf_nan=False, description="Plate distance in MeV^-1.")


class ParticleMass(BaseModel):
    """Rest mass m of the mediating species in MeV."""
    model_config = ConfigDict(frozen=True)

    value: float = Field(..., ge=0, allow_inf_nan=False, description="Rest mass in MeV.")


class ForcePerArea(BaseModel):
    """Casimir force per unit plate area in MeV^4; negative means attractive."""
    model_config = ConfigDict(frozen=True)

    value: float = Field(..., le=0, allow_inf_nan=False, description="Signed force per area in MeV^4.")

    @property
    def magnitude(self) -> float:
        return -self.value


class EnergyPerArea(BaseModel):
    """Renormalized vacuum energy per unit plate area in MeV^3 (a binding energy)."""
    model_config = ConfigDict(frozen=True)

    value: float = Field(..., le=0, allow_inf_nan=False, description="Energy per area in MeV^3.")


def inverse_power(a: float, n: int) -> float:
    """a^-n for a positive distance; inf once it leaves double range."""
    try:
        return a ** -n
    except OverflowError:
        return math.inf


def force_per_area(value: float) -> ForcePerArea:
    """Wrap a computed force, raising NumericalError when it overflowed."""
    if not math.isfinite(value):
        raise NumericalError(f"force per area {value!r} overflows double precision; increase the plate distance")
    return ForcePerArea(value=value)


def energy_per_area(value: float) -> EnergyPerArea:
    if not math.isfinite(value):
        raise NumericalError(f"energy per area {value!r} overflows double precision; increase the plate distance")
    return EnergyPerArea(value=value)


def _first_error(exc: ValidationError) -> str:
    error = exc.errors()[0]
    return error.get("msg", str(exc))


def require_separation(a) -> PlateSeparation:
    """Validate a raw natural-unit distance, raising DomainError on failure."""
    if isinstance(a, PlateSeparation):
        return a
    try:
        return PlateSeparation(value=a)
    except ValidationError as e:
        raise DomainError(f"plate separation {a!r}: {_first_error(e)}") from None


def require_mass(m) -> ParticleMass:
    """Validate a raw mass in MeV, raising DomainError on failure."""
    if isinstance(m, ParticleMass):
        return m
    try:
        return ParticleMass(value=m)
    except ValidationError as e:
        raise DomainError(f"particle mass {m!r}: {_first_error(e)}") from None


def _require_positive_length(d: float, unit: str) -> float:
    d = float(d)
    if not math.isfinite(d) or d <= 0:
        raise DomainError(f"length must be positive and finite, got {d!r} {unit}")
    return d


def fm_to_natural(d_fm: float) -> float:
    """Convert a length in fm to MeV^-1."""
    return _require_positive_length(d_fm, "fm") / HBAR_C_MEV_FM


def natural_to_fm(d: float) -> float:
    """Convert a length in MeV^-1 to fm."""
    return _require_positive_length(d, "MeV^-1") * HBAR_C_MEV_FM


def gev_to_mev(x: float) -> float:
    return x * MEV_PER_GEV


def _require_finite(x: float, what: str) -> float:
    if isinstance(x, (ForcePerArea, EnergyPerArea)):
        x = x.value
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{what} must be finite, got {x!r}")
    return x


def natural_force_to_pascal(f) -> float:
    """
    Convert a force per area from MeV^4 to pascal.

    MeV^4 is first expressed as MeV/fm^3 through (1/hbar c)^3, then
    1 MeV/fm^3 = 1.6021766e32 Pa. The sign is preserved.
    """
    f = _require_finite(f, "force per area")
    return f / HBAR_C_MEV_FM ** 3 * MEV_PER_FM3_IN_PASCAL


def natural_energy_to_joule_per_m2(e) -> float:
    """Convert an energy per area from MeV^3 to J/m^2 (via MeV/fm^2)."""
    e = _require_finite(e, "energy per area")
    return e / HBAR_C_MEV_FM ** 2 * MEV_PER_FM2_IN_JOULE_PER_M2


def compton_length_fm(m: float) -> float:
    """Reduced Compton length hbar c / m in fm; infinite for a massless species."""
    m = require_mass(m).value
    if m == 0:
        return math.inf
    return HBAR_C_MEV_FM / m

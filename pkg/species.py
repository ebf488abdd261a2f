"""
Particle species and multi-species superposition.

Every species contributes as an ideal scalar field of its mass; the total
force is the plain sum of single-species forces, summed in ensemble order.
"""
import math
import logging
import re
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator
from scipy.optimize import brentq

from casimir import compute_force
from errors import DomainError, SuppressedEnsembleError
from quadrature import DEFAULT_TOLERANCE, Tolerance
from units import ForcePerArea, force_per_area, gev_to_mev, require_separation

logger = logging.getLogger(__name__)

FIGURE_MASSES_MEV = {"photon": 0.0, "positronium": 1.0, "pi0": 135.0}
# positronium as 2 m_e; pi0 from the particle data tables
PRECISE_MASSES_MEV = {"photon": 0.0, "positronium": 1.022, "pi0": 134.9768}

# crossover scan starts where the species is already negligible
CROSSOVER_START_GAP = 40.0
CROSSOVER_SCAN_FACTOR = 2.0
CROSSOVER_MAX_STEPS = 200


class Species(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = Field(..., pattern=r"^[A-Za-z_][A-Za-z0-9_]*$", description="Identifier used in CSV columns.")
    mass: float = Field(..., ge=0, allow_inf_nan=False, description="Rest mass in MeV.")


class Ensemble(BaseModel):
    """Ordered, non-empty collection of uniquely named species."""
    model_config = ConfigDict(frozen=True)

    species: Tuple[Species, ...] = Field(..., min_length=1)

    @field_validator("species")
    @classmethod
    def _unique_names(cls, value):
        names = [s.name for s in value]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise ValueError(f"duplicate species names: {', '.join(duplicates)}")
        return value

    @classmethod
    def of(cls, *species: Species) -> "Ensemble":
        try:
            return cls(species=tuple(species))
        except ValidationError as e:
            raise DomainError(f"invalid ensemble: {e.errors()[0].get('msg')}") from None

    @property
    def names(self):
        return [s.name for s in self.species]

    def get(self, name: str) -> Species:
        for s in self.species:
            if s.name == name:
                return s
        raise DomainError(f"species {name!r} is not in the ensemble ({', '.join(self.names)})")


def make_species(name: str, mass: float) -> Species:
    try:
        return Species(name=name, mass=mass)
    except ValidationError as e:
        raise DomainError(f"invalid species {name!r}: {e.errors()[0].get('msg')}") from None


def builtin_registry(precise: bool = False) -> Ensemble:
    """
    photon, positronium and pi0.

    Args:
        precise (bool): Use 1.022 MeV and 134.9768 MeV instead of the round
            1 MeV and 135 MeV values

    Returns:
        Ensemble: The three built-in species in that order
    """
    masses = PRECISE_MASSES_MEV if precise else FIGURE_MASSES_MEV
    return Ensemble.of(*(make_species(name, mass) for name, mass in masses.items()))


_MASS_TOKEN = re.compile(r"^\s*([0-9.eE+-]+)\s*(mev|gev)?\s*$", re.IGNORECASE)


def parse_mass(text: str) -> float:
    """'135', '135MeV' or '3GeV' -> MeV."""
    match = _MASS_TOKEN.match(str(text))
    if not match:
        raise DomainError(f"cannot read mass {text!r}; use e.g. 135, 135MeV or 3GeV")
    try:
        value = float(match.group(1))
    except ValueError:
        raise DomainError(f"cannot read mass {text!r}") from None
    if (match.group(2) or "mev").lower() == "gev":
        value = gev_to_mev(value)
    if not math.isfinite(value) or value < 0:
        raise DomainError(f"mass must be finite and non-negative, got {text!r}")
    return value


def parse_species(token: str, registry: Ensemble) -> Species:
    """A registry name, or name=mass with the mass in MeV (default) or GeV."""
    if "=" in token:
        name, mass = token.split("=", 1)
        return make_species(name.strip(), parse_mass(mass))
    return registry.get(token.strip())


def species_forces(a: float, ensemble: Ensemble, tol: Tolerance = DEFAULT_TOLERANCE,
                   method: str = "integral") -> dict:
    """Signed force of every species at distance a, in ensemble order."""
    a = require_separation(a).value
    return {s.name: compute_force(a, s.mass, method, tol).force.value for s in ensemble.species}


def total_force(a: float, ensemble: Ensemble, tol: Tolerance = DEFAULT_TOLERANCE,
                method: str = "integral") -> ForcePerArea:
    """Sum of the single-species forces (attractive, MeV^4), in ensemble order."""
    return force_per_area(sum(species_forces(a, ensemble, tol, method).values()))


def ratios_from_forces(forces: dict) -> dict:
    magnitudes = {name: abs(f) for name, f in forces.items()}
    total = sum(magnitudes.values())
    if total == 0.0:
        raise SuppressedEnsembleError("every species underflowed; contribution ratios are undefined")
    return {name: value / total for name, value in magnitudes.items()}


def contribution_ratios(a: float, ensemble: Ensemble, tol: Tolerance = DEFAULT_TOLERANCE,
                        method: str = "integral") -> dict:
    return ratios_from_forces(species_forces(a, ensemble, tol, method))


def contribution_ratio(a: float, s, ensemble: Ensemble, tol: Tolerance = DEFAULT_TOLERANCE,
                       method: str = "integral") -> float:
    """
    |F(a, m_s)| / sum_i |F(a, m_i)|.

    Args:
        s (Species | str): Member of the ensemble

    Raises:
        DomainError: s is not in the ensemble
    """
    name = s.name if isinstance(s, Species) else str(s)
    member = ensemble.get(name)
    if isinstance(s, Species) and s.mass != member.mass:
        raise DomainError(f"species {name!r} has mass {member.mass} MeV in the ensemble, not {s.mass}")
    return contribution_ratios(a, ensemble, tol, method)[name]


def crossover_distance(s, ensemble: Ensemble, tol: Tolerance = DEFAULT_TOLERANCE,
                       method: str = "integral") -> float:
    """
    Distance a* (MeV^-1) where a species' ratio reaches half its small-a limit 1/N.

    The scan starts at 2am = 40, where the species is negligible, and halves
    a until the ratio passes the target; brentq then refines the bracket.

    Raises:
        DomainError: The species is massless, so its ratio never drops
    """
    name = s.name if isinstance(s, Species) else str(s)
    member = ensemble.get(name)
    if member.mass == 0.0:
        raise DomainError(f"{name} is massless; its ratio has no crossover")
    target = 0.5 / len(ensemble.species)

    def excess(a):
        return contribution_ratio(a, name, ensemble, tol, method) - target

    hi = CROSSOVER_START_GAP / (2.0 * member.mass)
    if excess(hi) >= 0:
        raise DomainError(f"{name} ratio already exceeds {target:.3g} at 2am = {CROSSOVER_START_GAP}")
    for _ in range(CROSSOVER_MAX_STEPS):
        lo = hi / CROSSOVER_SCAN_FACTOR
        if excess(lo) >= 0:
            a_star = brentq(excess, lo, hi, xtol=1e-14, rtol=1e-10)
            logger.info("crossover of %s at a* = %.10g MeV^-1", name, a_star)
            return a_star
        hi = lo
    raise DomainError(f"{name} ratio never reaches {target:.3g}")

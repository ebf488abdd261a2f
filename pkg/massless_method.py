import math

from casimir import ForceResult
from errors import DomainError
from units import energy_per_area, force_per_area, inverse_power, require_mass, require_separation


class Method:
    def __init__(self):
        """
        Closed forms of the massless (photon) limit.

        Used directly for m = 0 and as the small-gap fallback of the
        Bessel series.
        """
        self.name = "massless-closed-form"
        self.flag = None

    @staticmethod
    def _massless_only(m):
        if require_mass(m).value != 0.0:
            raise DomainError("the closed form holds only for m = 0")

    def force(self, a, m=0.0, tol=None):
        """F(a, 0) = -pi^2 / (240 a^4)."""
        self._massless_only(m)
        a = require_separation(a).value
        value = -math.pi ** 2 / 240.0 * inverse_power(a, 4)
        return ForceResult(force=force_per_area(value), method=self.name, a=a, mass=0.0)

    def energy(self, a, m=0.0, tol=None):
        """E(a, 0)/S = -pi^2 / (720 a^3)."""
        self._massless_only(m)
        a = require_separation(a).value
        return energy_per_area(-math.pi ** 2 / 720.0 * inverse_power(a, 3))

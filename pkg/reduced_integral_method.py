import math
import logging

from casimir import ForceResult, gap_underflows, reduced_energy_scaled, reduced_g_scaled
from quadrature import DEFAULT_TOLERANCE
from units import (
    EnergyPerArea, energy_per_area, force_per_area, inverse_power, require_mass, require_separation,
)

logger = logging.getLogger(__name__)


class Method:
    def __init__(self):
        """
        Reduced one-dimensional integral.

        Substituting u = mu in the double integral gives k dk = u du / (4a^2)
        and F = -G(2am) / (16 pi^2 a^4), G(x0) = int_x0^inf u J(u) du, with
        the inner integral J in its singularity-free cosh form.
        """
        self.name = "reduced-integral"
        self.flag = "integral"

    def force(self, a, m, tol=DEFAULT_TOLERANCE):
        """
        Compute the force per unit area.

        Args:
            a (float): Plate distance in MeV^-1
            m (float): Mass in MeV
            tol (Tolerance): Outer quadrature tolerance; inner integrals use a tighter one

        Returns:
            ForceResult: Attractive force with the propagated error estimate
        """
        a = require_separation(a).value
        m = require_mass(m).value
        if gap_underflows(a, m):
            return ForceResult.underflow(a, m, self.name)

        x0 = 2.0 * a * m
        g = reduced_g_scaled(x0, tol)
        scale = math.exp(-x0) / (16.0 * math.pi ** 2) * inverse_power(a, 4)
        logger.debug("reduced integral at x0=%.6g: %d outer evaluations", x0, g.evaluations)
        return ForceResult(
            force=force_per_area(-scale * g.value),
            method=self.name,
            error_estimate=scale * g.error_estimate,
            a=a, mass=m,
        )

    def energy(self, a, m, tol=DEFAULT_TOLERANCE):
        """E/S = -1/(16 pi^2 a^3) int_2am^inf u H(u) du."""
        a = require_separation(a).value
        m = require_mass(m).value
        if gap_underflows(a, m):
            logger.warning("2am = %.6g: energy underflows, reporting exact zero", 2 * a * m)
            return EnergyPerArea(value=0.0)

        x0 = 2.0 * a * m
        e = reduced_energy_scaled(x0, tol)
        return energy_per_area(-math.exp(-x0) * e.value / (16.0 * math.pi ** 2) * inverse_power(a, 3))

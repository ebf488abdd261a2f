import math
import logging

from casimir import ForceResult, gap_underflows
from quadrature import DEFAULT_TOLERANCE, Tolerance, integrate_semi_infinite
from units import force_per_area, inverse_power, require_mass, require_separation

logger = logging.getLogger(__name__)

# the raw singular inner integral cannot be pushed much below this
DIRECT_REL_FLOOR = 1e-9


def _singular_inner_scaled(mu, tol):
    """
    e^mu times the inner y-integral exactly as printed, shifted to s = y - mu:

        int_0^inf ds e^-s [ mu^2 / (b sqrt(s (2 mu + s))) + sqrt(s (2 mu + s)) / b ],
        b = 1 - e^-(mu + s)

    The first term keeps its s^(-1/2) endpoint singularity; adaptive
    bisection and extrapolation deal with it.
    """
    def integrand(s):
        root = math.sqrt(s * (2.0 * mu + s))
        if root == 0.0:
            return 0.0
        damping = math.exp(-s)
        bose = -1.0 / math.expm1(-(mu + s))
        return damping * bose * (mu * mu / root + root)

    return integrate_semi_infinite(integrand, 0.0, tol)


class Method:
    def __init__(self):
        """
        Literal nested evaluation of the double integral.

        The transverse momentum is made dimensionless as kappa = 2ak, so
        F = -1/(16 pi^2 a^4) int_0^inf kappa dkappa I(sqrt(x0^2 + kappa^2)).
        Slower and less accurate than the reduced path; it exists to check it.
        """
        self.name = "direct-eq4"
        self.flag = "direct"

    def force(self, a, m, tol=DEFAULT_TOLERANCE):
        a = require_separation(a).value
        m = require_mass(m).value
        if gap_underflows(a, m):
            return ForceResult.underflow(a, m, self.name)

        x0 = 2.0 * a * m
        outer_tol = Tolerance(rel=max(tol.rel, DIRECT_REL_FLOOR), abs=tol.abs)
        inner_tol = outer_tol.tightened(10.0)

        def integrand(kappa):
            mu = math.hypot(x0, kappa)
            # mu - x0 without cancellation
            excess = kappa * kappa / (mu + x0) if mu > 0.0 else 0.0
            weight = kappa * math.exp(-excess)
            if weight == 0.0:
                return 0.0
            return weight * _singular_inner_scaled(mu, inner_tol).value

        outer = integrate_semi_infinite(integrand, 0.0, outer_tol)
        scale = math.exp(-x0) / (16.0 * math.pi ** 2) * inverse_power(a, 4)
        logger.debug("direct double integral at x0=%.6g: %d outer evaluations", x0, outer.evaluations)
        return ForceResult(
            force=force_per_area(-scale * outer.value),
            method=self.name,
            error_estimate=scale * outer.error_estimate,
            a=a, mass=m,
        )

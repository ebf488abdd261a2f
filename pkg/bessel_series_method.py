import math
import logging

import numpy as np

from casimir import ForceResult, gap_underflows
from errors import ConvergenceError
from specfun import bessel_k
from units import (
    EnergyPerArea, energy_per_area, force_per_area, inverse_power, require_mass, require_separation,
)

logger = logging.getLogger(__name__)

# stop once a term falls below this fraction of the running sum
SERIES_CUTOFF = 1e-16
MAX_TERMS = 100_000
BLOCK = 4096
# below this gap the series needs more than MAX_TERMS terms; the closed form is exact there
MASSLESS_GAP = 1e-4


def _force_terms(n, x0):
    z = n * x0
    return x0 * bessel_k(1, z) / n + 3.0 * bessel_k(2, z) / n ** 2


def _energy_terms(n, x0):
    return bessel_k(2, n * x0) / n ** 2


def bessel_sum(terms, x0):
    """
    Sum terms(n, x0) over n = 1, 2, ... in vectorised blocks.

    Returns:
        tuple: (sum, first neglected-size term, number of terms)
    """
    kept = []
    running = 0.0
    start = 1
    while start <= MAX_TERMS:
        n = np.arange(start, min(start + BLOCK, MAX_TERMS + 1), dtype=float)
        block = terms(n, x0)
        partial = running + np.cumsum(block)
        small = np.flatnonzero(block < SERIES_CUTOFF * partial)
        if small.size:
            stop = int(small[0])
            kept.append(block[:stop + 1])
            total = math.fsum(np.concatenate(kept))
            return total, float(block[stop]), start + stop
        kept.append(block)
        running = float(partial[-1])
        start += BLOCK
    total = math.fsum(np.concatenate(kept))
    raise ConvergenceError(f"Bessel series at 2am = {x0} did not settle within {MAX_TERMS} terms",
                           best_estimate=total, error_estimate=float(kept[-1][-1]))


class Method:
    def __init__(self):
        """
        Bessel-series resummation.

        Expanding 1/(e^y - 1) = sum_n e^-ny turns the inner integrals into
        K0/K1 Laplace integrals; integrating over u and differentiating the
        energy series E/S = -(m^2 / (4 pi^2 a)) sum K2(2nma) / n^2 gives
        |F| = m^2/(4 pi^2 a^2) sum_n [2ma K1(2nma)/n + 3 K2(2nma)/n^2].
        No quadrature is involved, which makes this the oracle for the
        integral paths.
        """
        self.name = "bessel-series"
        self.flag = "bessel"

    def force(self, a, m, tol=None):
        a = require_separation(a).value
        m = require_mass(m).value
        x0 = 2.0 * a * m
        if x0 < MASSLESS_GAP:
            value = -math.pi ** 2 / 240.0 * inverse_power(a, 4)
            return ForceResult(force=force_per_area(value), method=self.name, a=a, mass=m)
        if gap_underflows(a, m):
            return ForceResult.underflow(a, m, self.name)

        total, last, count = bessel_sum(_force_terms, x0)
        prefactor = m * m / (4.0 * math.pi ** 2) * inverse_power(a, 2)
        logger.debug("force series at x0=%.6g truncated after %d terms", x0, count)
        return ForceResult(
            force=force_per_area(-prefactor * total),
            method=self.name,
            error_estimate=prefactor * last,
            a=a, mass=m,
        )

    def energy(self, a, m, tol=None):
        a = require_separation(a).value
        m = require_mass(m).value
        x0 = 2.0 * a * m
        if x0 < MASSLESS_GAP:
            return energy_per_area(-math.pi ** 2 / 720.0 * inverse_power(a, 3))
        if gap_underflows(a, m):
            return EnergyPerArea(value=0.0)

        total, _, count = bessel_sum(_energy_terms, x0)
        logger.debug("energy series at x0=%.6g truncated after %d terms", x0, count)
        return energy_per_area(-m * m / (4.0 * math.pi ** 2 * a) * total)

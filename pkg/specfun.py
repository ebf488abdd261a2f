"""
Modified Bessel functions of the second kind K0, K1, K2 and their
exponentially scaled forms e^x K(x).

K0 and K1 come from the Cephes Chebyshev expansions in scipy.special
(log-series branch below x = 2, scaled asymptotic branch above); K2 follows
from the recurrence K2(x) = K0(x) + (2/x) K1(x). Only these three orders are
needed by the series oracles, so there is no general-order machinery.

Scalars in give floats out; numpy arrays are evaluated element-wise.
"""
from enum import IntEnum

import numpy as np
from scipy import special

from errors import DomainError


class BesselOrder(IntEnum):
    K0 = 0
    K1 = 1
    K2 = 2


def _order(order) -> BesselOrder:
    try:
        return BesselOrder(int(order))
    except (TypeError, ValueError):
        raise DomainError(f"Bessel order must be 0, 1 or 2, got {order!r}") from None


def _argument(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if np.any(np.isnan(x)) or np.any(x <= 0):
        raise DomainError("K_nu(x) needs x > 0 (it diverges at the origin)")
    return x


def _scaled(order: BesselOrder, x: np.ndarray) -> np.ndarray:
    if order is BesselOrder.K0:
        return special.k0e(x)
    if order is BesselOrder.K1:
        return special.k1e(x)
    return special.k0e(x) + 2.0 * special.k1e(x) / x


def _unwrap(result: np.ndarray, like):
    if np.ndim(like) == 0:
        return float(result)
    return result


def bessel_k_scaled(order, x):
    """
    Exponentially scaled e^x K_order(x).

    Args:
        order (int | BesselOrder): 0, 1 or 2
        x (float | numpy.ndarray): Positive argument(s)

    Returns:
        float | numpy.ndarray: Finite for arguments far beyond the
        underflow point of e^-x
    """
    order = _order(order)
    return _unwrap(_scaled(order, _argument(x)), x)


def bessel_k(order, x):
    """K_order(x); the scaled value is recombined with e^-x, which underflows to 0 past x ~ 745."""
    order = _order(order)
    arg = _argument(x)
    return _unwrap(_scaled(order, arg) * np.exp(-arg), x)

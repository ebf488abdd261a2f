import math

import pytest
from pydantic import ValidationError

from errors import ConvergenceError, DomainError, EvaluationError
from quadrature import (
    DEFAULT_TOLERANCE, QuadratureResult, Tolerance, integrate_finite, integrate_semi_infinite,
)


def bose_weighted(power):
    def f(y):
        return y ** power * math.exp(-y) / -math.expm1(-y)
    return f


def test_default_tolerance():
    assert DEFAULT_TOLERANCE.rel == 1e-10
    assert DEFAULT_TOLERANCE.abs == 1e-30
    assert DEFAULT_TOLERANCE.target(2.0) == 2e-10
    assert DEFAULT_TOLERANCE.target(0.0) == 1e-30


def test_tightened():
    assert Tolerance(rel=1e-8).tightened(10.0).rel == pytest.approx(1e-9)
    assert Tolerance(rel=1e-13).tightened(10.0).rel == 5e-14


@pytest.mark.parametrize("rel", [0.0, 1.0, -1e-3])
def test_tolerance_bounds(rel):
    with pytest.raises(ValidationError):
        Tolerance(rel=rel)


def test_inverse_square_root_endpoint():
    result = integrate_finite(lambda x: 1.0 / math.sqrt(x), 0.0, 1.0)
    assert result.value == pytest.approx(2.0, rel=1e-10)
    assert result.evaluations >= 1


def test_sine():
    result = integrate_finite(math.sin, 0.0, math.pi)
    assert result.value == pytest.approx(2.0, rel=1e-12)
    assert abs(result.value - 2.0) <= result.error_estimate + 1e-15


def test_exponential_tail():
    assert integrate_semi_infinite(lambda x: math.exp(-x), 0.0).value == pytest.approx(1.0, rel=1e-12)
    assert integrate_semi_infinite(lambda x: math.exp(-x * math.cosh(1.0)), 0.0).value == \
        pytest.approx(1.0 / math.cosh(1.0), rel=1e-12)


def test_bose_integrals():
    assert integrate_semi_infinite(bose_weighted(1), 0.0).value == pytest.approx(math.pi ** 2 / 6, rel=1e-10)
    assert integrate_semi_infinite(bose_weighted(3), 0.0).value == pytest.approx(math.pi ** 4 / 15, rel=1e-10)


def test_shifted_lower_limit():
    # int_2^inf e^-x dx = e^-2
    assert integrate_semi_infinite(lambda x: math.exp(-x), 2.0).value == pytest.approx(math.exp(-2.0), rel=1e-12)


def test_linearity():
    f, g = math.sin, math.cos
    combined = integrate_finite(lambda x: 2.0 * f(x) - 3.0 * g(x), 0.0, 2.0).value
    separate = 2.0 * integrate_finite(f, 0.0, 2.0).value - 3.0 * integrate_finite(g, 0.0, 2.0).value
    assert combined == pytest.approx(separate, rel=1e-10)


def test_interval_additivity():
    f = bose_weighted(2)
    whole = integrate_finite(f, 0.0, 4.0).value
    parts = integrate_finite(f, 0.0, 1.5).value + integrate_finite(f, 1.5, 4.0).value
    assert whole == pytest.approx(parts, rel=1e-10)


def test_deterministic():
    f = bose_weighted(3)
    assert integrate_semi_infinite(f, 0.0).value == integrate_semi_infinite(f, 0.0).value


def test_non_convergence_carries_best_estimate():
    with pytest.raises(ConvergenceError) as info:
        integrate_finite(lambda x: 1.0 / x, 0.0, 1.0, limit=5)
    assert info.value.exit_code == 3
    assert hasattr(info.value, "best_estimate")
    assert info.value.error_estimate > 0


def test_nan_integrand():
    with pytest.raises(EvaluationError):
        integrate_finite(lambda x: math.nan, 0.0, 1.0)


@pytest.mark.parametrize("value", [math.inf, -math.inf])
def test_infinite_integrand(value):
    with pytest.raises(EvaluationError):
        integrate_finite(lambda x: value, 0.0, 1.0)
    with pytest.raises(EvaluationError):
        integrate_semi_infinite(lambda x: value * math.exp(-x), 0.0)


@pytest.mark.parametrize("lo, hi", [(1.0, 1.0), (2.0, 1.0), (0.0, math.inf)])
def test_finite_interval_domain(lo, hi):
    with pytest.raises(DomainError):
        integrate_finite(math.sin, lo, hi)


def test_semi_infinite_needs_finite_start():
    with pytest.raises(DomainError):
        integrate_semi_infinite(math.exp, -math.inf)


def test_result_rejects_nan():
    with pytest.raises(ValidationError):
        QuadratureResult(value=math.nan, error_estimate=0.0, evaluations=1)

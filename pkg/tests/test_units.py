import math

import pytest
from pydantic import ValidationError

from errors import DomainError, NumericalError
from units import (
    HBAR_C_MEV_FM, EnergyPerArea, ForcePerArea, ParticleMass, PlateSeparation,
    compton_length_fm, energy_per_area, force_per_area, inverse_power, fm_to_natural, gev_to_mev, natural_energy_to_joule_per_m2,
    natural_force_to_pascal, natural_to_fm, require_mass, require_separation,
)


def test_fm_to_natural():
    assert fm_to_natural(197.3269804) == pytest.approx(1.0, rel=1e-15)
    assert fm_to_natural(1.0) == pytest.approx(5.06773e-3, rel=1e-5)
    assert natural_to_fm(1.0) == HBAR_C_MEV_FM


@pytest.mark.parametrize("x", [1e-3, 1.0, 1e3, 12345.678])
def test_length_round_trip(x):
    assert natural_to_fm(fm_to_natural(x)) == pytest.approx(x, rel=1e-15)
    assert fm_to_natural(natural_to_fm(x)) == pytest.approx(x, rel=1e-15)


@pytest.mark.parametrize("bad", [0.0, -1.0, math.inf, math.nan])
def test_length_domain(bad):
    with pytest.raises(DomainError):
        fm_to_natural(bad)
    with pytest.raises(DomainError):
        natural_to_fm(bad)


def test_force_to_pascal():
    assert natural_force_to_pascal(0.0) == 0.0
    assert natural_force_to_pascal(1.0) == pytest.approx(1.6021766e32 / HBAR_C_MEV_FM ** 3, rel=1e-15)
    assert natural_force_to_pascal(-1.0) < 0
    assert natural_force_to_pascal(ForcePerArea(value=-2.0)) == pytest.approx(2 * natural_force_to_pascal(-1.0))
    with pytest.raises(DomainError):
        natural_force_to_pascal(math.inf)


def test_energy_to_joule_per_m2():
    assert natural_energy_to_joule_per_m2(-1.0) == pytest.approx(-1.6021766e17 / HBAR_C_MEV_FM ** 2, rel=1e-15)
    assert natural_energy_to_joule_per_m2(EnergyPerArea(value=0.0)) == 0.0


def test_conversions_are_linear():
    assert natural_force_to_pascal(-3.5) == pytest.approx(3.5 * natural_force_to_pascal(-1.0), rel=1e-15)
    assert fm_to_natural(7.0) == pytest.approx(7.0 * fm_to_natural(1.0), rel=1e-15)


def test_compton_length():
    assert compton_length_fm(135.0) == pytest.approx(1.4617, rel=1e-4)
    assert compton_length_fm(1.0) == HBAR_C_MEV_FM
    assert compton_length_fm(0.0) == math.inf


def test_gev_to_mev():
    assert gev_to_mev(3.0) == 3000.0


def test_value_types():
    with pytest.raises(ValidationError):
        PlateSeparation(value=0.0)
    with pytest.raises(ValidationError):
        ParticleMass(value=-1.0)
    with pytest.raises(ValidationError):
        ForcePerArea(value=1.0)
    with pytest.raises(ValidationError):
        EnergyPerArea(value=math.nan)
    assert ForcePerArea(value=-2.5).magnitude == 2.5


def test_require_converts_to_domain_error():
    assert require_separation(2.0).value == 2.0
    assert require_mass(0.0).value == 0.0
    with pytest.raises(DomainError):
        require_separation(-1.0)
    with pytest.raises(DomainError):
        require_mass(math.inf)
    # DomainError stays a ValueError for callers outside the package
    with pytest.raises(ValueError):
        require_mass(-1.0)


def test_inverse_power_saturates():
    assert inverse_power(2.0, 4) == 1 / 16
    assert inverse_power(1e-78, 4) == math.inf
    assert inverse_power(1e-200, 2) == math.inf


def test_overflowed_values_are_numerical_errors():
    assert force_per_area(-1.5) == ForcePerArea(value=-1.5)
    assert energy_per_area(0.0) == EnergyPerArea(value=0.0)
    for bad in (-math.inf, math.nan):
        with pytest.raises(NumericalError) as info:
            force_per_area(bad)
        assert info.value.exit_code == 3
        with pytest.raises(NumericalError):
            energy_per_area(bad)

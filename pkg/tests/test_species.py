import math

import pytest
from numpy.testing import assert_allclose

from casimir import massless_force
from errors import DomainError, SuppressedEnsembleError
from species import (
    Ensemble, Species, builtin_registry, contribution_ratio, contribution_ratios,
    crossover_distance, make_species, parse_mass, parse_species, ratios_from_forces,
    species_forces, total_force,
)
from units import ForcePerArea, fm_to_natural


@pytest.fixture
def pair(registry):
    return Ensemble.of(registry.get("photon"), registry.get("positronium"))


def test_builtin_registry():
    assert {s.name: s.mass for s in builtin_registry().species} == {"photon": 0.0, "positronium": 1.0, "pi0": 135.0}
    precise = builtin_registry(precise=True)
    assert precise.get("positronium").mass == 1.022
    assert precise.get("pi0").mass == 134.9768
    assert precise.get("photon").mass == 0.0
    assert builtin_registry().names == ["photon", "positronium", "pi0"]


def test_photon_only_total():
    photon = Ensemble.of(make_species("photon", 0.0))
    assert total_force(2.0, photon) == massless_force(2.0).force


def test_photon_clone_doubles_exactly():
    clones = Ensemble.of(make_species("photon", 0.0), make_species("photon2", 0.0))
    assert total_force(1.5, clones).value == 2 * massless_force(1.5).force.value


def test_positronium_doubles_small_distance_force(pair):
    a = 1e-3 / 2.0
    assert_allclose(total_force(a, pair).value, 2 * massless_force(a).force.value, rtol=1e-3)


def test_superposition_is_the_plain_sum(registry):
    forces = species_forces(0.01, registry)
    assert list(forces) == registry.names
    total = total_force(0.01, registry)
    assert isinstance(total, ForcePerArea)
    assert total.value == sum(forces.values())


def test_ratios_sum_to_one(registry):
    for a in (1e-3, 0.01, 0.1, 1.0):
        assert_allclose(sum(contribution_ratios(a, registry).values()), 1.0, rtol=1e-12)


def test_positronium_ratio_limits(pair):
    assert abs(contribution_ratio(1e-3 / 2.0, "positronium", pair) - 0.5) <= 1e-3
    assert contribution_ratio(30.0 / 2.0, "positronium", pair) < 1e-6


def test_pi0_ratio_small_distance(registry):
    a = 1e-3 / (2 * 135.0)
    assert abs(contribution_ratio(a, "pi0", registry) - 1 / 3) <= 1e-3


def test_pi0_ratio_around_one_fm(registry):
    at_one_fm = contribution_ratio(fm_to_natural(1.0), "pi0", registry)
    assert_allclose(at_one_fm, 1 / 3, rtol=0.15)
    assert at_one_fm < 1 / 3
    assert_allclose(contribution_ratio(fm_to_natural(0.2), "pi0", registry), 1 / 3, rtol=0.02)


def test_ratio_non_increasing(pair):
    ratios = [contribution_ratio(a, "positronium", pair) for a in (0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0)]
    assert all(x >= y for x, y in zip(ratios, ratios[1:]))


def test_ratio_accepts_species_instance(pair, registry):
    positronium = registry.get("positronium")
    assert contribution_ratio(1.0, positronium, pair) == contribution_ratio(1.0, "positronium", pair)
    with pytest.raises(DomainError):
        contribution_ratio(1.0, make_species("positronium", 1.022), pair)


def test_ratio_unknown_species(pair):
    with pytest.raises(DomainError):
        contribution_ratio(1.0, "pi0", pair)


def test_suppressed_ensemble():
    heavy = Ensemble.of(make_species("heavy", 1000.0))
    with pytest.raises(SuppressedEnsembleError):
        contribution_ratios(1.0, heavy)
    with pytest.raises(SuppressedEnsembleError):
        ratios_from_forces({"a": 0.0, "b": 0.0})


def test_crossover_distance(pair):
    a_star = crossover_distance("positronium", pair)
    # the ratio transition sits near a ~ 1/(2m)
    assert 1.0 < a_star * 1.0 < 3.0
    assert_allclose(contribution_ratio(a_star, "positronium", pair), 0.25, rtol=1e-6)


def test_crossover_scales_with_mass(registry):
    pair = Ensemble.of(make_species("photon", 0.0), make_species("heavy", 10.0))
    a_star = crossover_distance("heavy", pair)
    assert 0.1 < a_star < 0.3


def test_crossover_massless():
    with pytest.raises(DomainError):
        crossover_distance("photon", builtin_registry())


@pytest.mark.parametrize("text, mev", [("135", 135.0), ("135MeV", 135.0), ("3GeV", 3000.0), ("1.5 mev", 1.5), ("0", 0.0)])
def test_parse_mass(text, mev):
    assert parse_mass(text) == mev


@pytest.mark.parametrize("text", ["abc", "-1", "3TeV", "", "nan"])
def test_parse_mass_rejects(text):
    with pytest.raises(DomainError):
        parse_mass(text)


def test_parse_species(registry):
    assert parse_species("positronium", registry) == registry.get("positronium")
    assert parse_species("heavy=2GeV", registry) == Species(name="heavy", mass=2000.0)
    assert parse_species("light = 0.5", registry).mass == 0.5
    with pytest.raises(DomainError):
        parse_species("muon", registry)
    with pytest.raises(DomainError):
        parse_species("bad name=1", registry)


def test_ensemble_validation():
    photon = make_species("photon", 0.0)
    with pytest.raises(DomainError):
        Ensemble.of(photon, make_species("photon", 1.0))
    with pytest.raises(DomainError):
        Ensemble.of()
    with pytest.raises(DomainError):
        make_species("photon", -1.0)
    assert Ensemble.of(photon).get("photon") is photon

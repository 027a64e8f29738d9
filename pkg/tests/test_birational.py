import random

import pytest

from wps3.birational import (
    HANDWRITTEN_ROUND_TRIP,
    SEXTIC_P_PRIME,
    blowup_factorization,
    expected_indeterminacy,
    projection,
    sextic_model_maps,
    square_projection,
)
from wps3.grading import DomainError
from wps3.poly import SparsePoly, random_homogeneous
from wps3.toric import MonomialMap, compose, equal_mod_scaling, indeterminacy_strata, pullback, scaling_vector


@pytest.fixture(scope="module")
def fact():
    return blowup_factorization()


def test_rays(fact):
    assert fact.ray_from_p == (-1, -1, -2) and fact.multiplicity_from_p == 4
    assert fact.ray_from_p_prime == (-4, -5, -10) and fact.multiplicity_from_p_prime == 1


def test_subdivisions_agree(fact):
    assert fact.fan_from_p.same_as(fact.fan_from_p_prime)
    assert fact.fan_from_p.is_complete_and_proper()
    assert fact.fan_from_p_prime.is_complete_and_proper()


def test_diagram_commutes(fact):
    assert fact.composite.format() == "[x^5 zeta^5 : x zeta^4 y : zeta^4 z : zeta^8 w]"
    assert equal_mod_scaling(fact.composite, fact.eps2)
    assert scaling_vector(fact.composite, fact.eps2) == (0, 4, 0, 0, 0)


@pytest.mark.parametrize("case", [9, 10, 12, 13, 14])
def test_projection_indeterminacy(case):
    assert indeterminacy_strata(projection(case)) == [frozenset({expected_indeterminacy(case)})]


def test_sextic_model():
    maps = sextic_model_maps()
    rt = compose(maps["phi"], maps["phi_inv"])
    assert rt.format() == "[a0^3 : a0^2 a1 : a0^2 a2 : a0^6 b]"
    assert equal_mod_scaling(rt, maps["id"])
    assert equal_mod_scaling(compose(maps["v2"], maps["phi_inv"]), maps["psi"])


def test_misquoted_round_trip_is_rejected():
    with pytest.raises(DomainError):
        MonomialMap.build(SEXTIC_P_PRIME, SEXTIC_P_PRIME, HANDWRITTEN_ROUND_TRIP)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_quintic_pullback(seed):
    rng = random.Random(seed)
    phi = projection(9)
    c = phi.target_coords
    q = SparsePoly.var(c, "u0") * random_homogeneous(c, 4, rng) + SparsePoly.var(c, "u1") ** 5
    pulled = pullback(phi, q)
    assert pulled.monomial_content() == (5, 0, 0, 0)
    assert pulled.divide_monomial((5, 0, 0, 0)).degree() == 20


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_square_pullback(seed):
    rng = random.Random(seed)
    psi = square_projection()
    c = psi.target_coords
    form = SparsePoly.var(c, "v'") * random_homogeneous(c, 15, rng) + SparsePoly.var(c, "t'") ** 2
    pulled = pullback(psi, form)
    assert pulled.monomial_content() == (0, 2, 0, 0)
    assert pulled.divide_monomial((0, 2, 0, 0)).degree() == 30

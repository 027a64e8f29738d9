from dataclasses import replace
from fractions import Fraction

import pytest

from wps3.grading import DimensionError, DomainError, WeightedSpace
from wps3.intersect import (
    embedding_dimension_check,
    extension_consistency,
    model_degree,
    model_dimension,
    top_intersection,
)
from wps3.reference import load_reference

REF = load_reference()


@pytest.mark.parametrize(
    "ambient,eqs,pol,expected",
    [
        ((1, 1, 1, 2, 4, 4, 4), (5,), 4, 40),
        ((1, 1, 3, 5, 9, 9), (10,), 9, 54),
        ((1, 1, 3, 4, 8, 8), (9,), 8, 48),
        ((1, 1, 2, 3, 6, 6), (7,), 6, 42),
        ((1, 2, 4, 5, 10, 10), (12,), 10, 30),
        ((1, 1, 2, 3, 5, 5, 5), (6, 6), 5, 30),
    ],
)
def test_model_degrees(ambient, eqs, pol, expected):
    assert model_degree(WeightedSpace(ambient), eqs, pol) == expected


def test_top_intersection_is_rational():
    assert top_intersection(WeightedSpace((1, 1, 2)), [1, 1]) == Fraction(1, 2)
    with pytest.raises(DimensionError):
        top_intersection(WeightedSpace((1, 1, 2)), [1])
    with pytest.raises(DomainError):
        top_intersection(WeightedSpace((1, 1, 2)), [1, -1])


def test_too_many_equations():
    with pytest.raises(DimensionError):
        model_degree(WeightedSpace((1, 1, 1)), [2, 2], 1)


@pytest.mark.parametrize("case", sorted(REF.cases))
def test_all_extension_checks_pass(case):
    results = extension_consistency(REF.cases[case], REF)
    assert all(r.passed for r in results), [r for r in results if not r.passed]


def test_printed_value_note():
    (r,) = [r for r in extension_consistency(REF.cases[12], REF) if r.part == "a"]
    assert r.passed and r.computed == 48
    assert "46" in r.note


def test_tampered_alpha_fails_dimension_check():
    bad = replace(REF.cases[9], alpha=5)
    failing = [r for r in extension_consistency(bad, REF) if not r.passed]
    assert failing and all(r.part == "b" for r in failing)


def test_case_11_is_not_extendable():
    results = extension_consistency(REF.cases[11], REF)
    assert any(r.check == "space is its own maximal extension" and r.passed for r in results)


def test_model_dimensions():
    dims = {m.label: model_dimension(m) for m in REF.models}
    assert dims == {"9": 5, "10": 4, "12": 4, "13": 4, "14": 5, "14-Y1": 4, "14-Y2": 4}


@pytest.mark.parametrize("label,expected", [("9", 24), ("10", 30), ("12", 27), ("13", 24), ("14-Y1", 18), ("14-Y2", 18)])
def test_embedding_dimension(label, expected):
    (m,) = [m for m in REF.models if m.label == label]
    r = embedding_dimension_check(m, REF.cases[m.case_id].g)
    assert r.passed and r.computed == expected

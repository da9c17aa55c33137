from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from cosegal.base import FinMap
from cosegal.errors import InputError, PreconditionError
from cosegal.laxdiag import (LaxDiagram, Transformation, check_strict_units, constant_diagram,
                             count_morphisms, diagram_to_semicat, enumerate_morphisms,
                             family_from_json, find_isomorphism, find_strict_units, is_cosegal,
                             is_strict, relabel, semicat_to_diagram, tensor_diagrams,
                             tensor_symmetry, tensor_unit_iso, transformation_from_json,
                             transformation_to_json, truncate_family, unit_diagram,
                             validate_diagram, validate_family, validate_transformation)
from cosegal.samples import random_family, random_lax_diagram, random_morphism
from cosegal.suite import action_semicategory, coarse_semicategory, z2_semicategory

seeds = st.integers(0, 10_000)


def _brute_morphisms(F, G, laxity=True):
    """Every component family, filtered by the validator."""
    chains = F.chains()
    homs = [list(F.base.hom(F.values[t], G.values[t])) for t in chains]
    out = []
    for pick in itertools.product(*homs):
        sigma = Transformation(F, G, dict(zip(chains, pick)))
        if not validate_transformation(sigma, laxity):
            out.append(sigma.components)
    return out


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_random_diagrams_are_valid(seed):
    rng = random.Random(seed)
    F = random_lax_diagram("AB", 3, rng)
    assert not validate_diagram(F, exhaustive=True)
    X = random_family("ABC", 3, rng)
    assert not validate_family(X)


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_enumeration_matches_brute_force(seed):
    rng = random.Random(seed)
    F = random_lax_diagram("AB", 2, rng)
    G = random_lax_diagram("AB", 2, rng)
    fast = list(enumerate_morphisms(F, G))
    slow = _brute_morphisms(F, G)
    assert sorted(map(sorted_items, fast)) == sorted(map(sorted_items, slow))
    assert count_morphisms(F, G, laxity=False) == len(_brute_morphisms(F, G, laxity=False))


def sorted_items(comps):
    return tuple(sorted((k, v.map) for k, v in comps.items()))


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_random_morphisms_validate(seed):
    rng = random.Random(seed)
    F = random_lax_diagram("AB", 3, rng)
    G = random_lax_diagram("AB", 3, rng)
    sigma = random_morphism(F, G, rng)
    if sigma is not None:
        assert not validate_transformation(sigma)
        assert sigma.compose_after(Transformation(F, F, {t: F.base.identity(F.values[t])
                                                         for t in F.chains()})).components == sigma.components


def test_enumeration_limit_and_mismatch():
    F = constant_diagram("AB", 2, 1)
    assert count_morphisms(F, F, limit=5) == 1
    with pytest.raises(InputError):
        list(enumerate_morphisms(F, constant_diagram("A", 2, 1)))


def _z2():
    return semicat_to_diagram(z2_semicategory(), 3)


def test_planted_associativity_defect():
    D = _z2()
    key = (("*", "*"), ("*", "*"))
    lx = dict(D.laxity)
    lx[key] = FinMap(4, 2, (0, 1, 1, 1))
    bad = LaxDiagram(D.labels, D.max_degree, D.values, D.actions, D.base, lx)
    assert {"associativity", "laxity-naturality"} >= validate_diagram(bad).kinds()
    assert "associativity" in validate_diagram(bad).kinds()


def test_planted_functoriality_and_shape_defects():
    D = _z2()
    acts = dict(D.actions)
    acts[(("*",) * 4, 0)] = FinMap(2, 2, (1, 0))
    bad = LaxDiagram(D.labels, D.max_degree, D.values, acts, D.base, D.laxity)
    assert "functoriality" in validate_diagram(bad).kinds()
    acts[(("*",) * 4, 0)] = FinMap(1, 2, (0,))
    bad = LaxDiagram(D.labels, D.max_degree, D.values, acts, D.base, D.laxity)
    assert validate_diagram(bad).kinds() == {"action-shape"}
    lx = dict(D.laxity)
    lx[(("*", "*"), ("*", "*"))] = FinMap(3, 2, (0, 0, 0))
    bad = LaxDiagram(D.labels, D.max_degree, D.values, D.actions, D.base, lx)
    assert validate_diagram(bad).kinds() == {"laxity-shape"}


def test_json_round_trip():
    rng = random.Random(3)
    F = random_lax_diagram("AB", 3, rng)
    G = family_from_json(F.to_json())
    assert isinstance(G, LaxDiagram)
    assert (G.values, G.actions, G.laxity) == (F.values, F.actions, F.laxity)
    X = random_family("AB", 2, rng)
    Y = family_from_json(X.to_json())
    assert (Y.values, Y.actions) == (X.values, X.actions) and not Y.is_lax()
    sigma = random_morphism(F, F, rng)
    back = transformation_from_json(transformation_to_json(sigma), F, F)
    assert back.components == sigma.components


@pytest.mark.parametrize("data", [
    {"objects": ["A"], "max_degree": 0, "values": {}},
    {"objects": ["A"], "max_degree": 1, "values": {}},
    {"objects": ["A"], "max_degree": 1, "values": {"A.B": 1}},
    {"objects": ["A"], "max_degree": 1, "values": {"A.A": -1}},
    {"objects": ["A"], "max_degree": 2, "values": {"A.A": 1, "A.A.A": 2}},
    {"values": {}},
])
def test_malformed_json_rejected(data):
    with pytest.raises(InputError):
        family_from_json(data)


@pytest.mark.parametrize("A", [z2_semicategory(), action_semicategory(), coarse_semicategory("AB")])
def test_semicategory_round_trip(A):
    assert not A.validate()
    D = semicat_to_diagram(A, 3)
    assert not validate_diagram(D, exhaustive=True)
    assert is_strict(D) and is_cosegal(D)
    assert diagram_to_semicat(D) == A


def test_semicategory_needs_invertible_actions():
    D = _z2()
    acts = dict(D.actions)
    acts[(("*",) * 3, 0)] = FinMap(2, 2, (0, 0))
    with pytest.raises(PreconditionError):
        diagram_to_semicat(LaxDiagram(D.labels, D.max_degree, D.values, acts, D.base, D.laxity))
    with pytest.raises(PreconditionError):
        diagram_to_semicat(truncate_family(D, 1))


def test_strict_units():
    D = _z2()
    units = find_strict_units(D)
    assert units == {"*": FinMap(1, 2, (0,))}
    assert check_strict_units(D, {"*": FinMap(1, 2, (1,))}).kinds() == {"left-unit", "right-unit"}
    assert find_strict_units(semicat_to_diagram(action_semicategory(), 2)) is not None


def test_is_cosegal_detects_failure():
    D = _z2()
    assert is_cosegal(D, all_maps=True)
    X = random_lax_diagram("AB", 2, random.Random(0))
    res = is_cosegal(X)
    assert bool(res) == (not res.witnesses)


def test_tensor_and_symmetry():
    rng = random.Random(5)
    F = random_lax_diagram("AB", 2, rng)
    G = semicat_to_diagram(z2_semicategory(), 2)
    FG = tensor_diagrams(F, G)
    assert not validate_diagram(FG)
    sym = tensor_symmetry(F, G)
    assert not validate_transformation(sym)
    assert sym.is_levelwise(F.base.is_iso)
    unit = tensor_unit_iso(F)
    assert not validate_transformation(unit)
    assert not validate_diagram(tensor_diagrams(F, unit_diagram(2)))
    with pytest.raises(InputError):
        tensor_diagrams(F, unit_diagram(3))


def test_relabel_is_isomorphic_after_renaming_back():
    F = random_lax_diagram("AB", 2, random.Random(11))
    R = relabel(F, {"A": "A", "B": "B"})
    assert find_isomorphism(F, R) is not None
    S = relabel(F, {"A": "X", "B": "Y"})
    assert S.labels == ("X", "Y") and S.values[("X", "Y")] == F.values[("A", "B")]


def test_truncation_keeps_lower_data():
    F = random_lax_diagram("AB", 3, random.Random(2))
    T = truncate_family(F, 2)
    assert T.max_degree == 2 and all(T.values[t] == F.values[t] for t in T.chains())
    assert not validate_diagram(T)
    with pytest.raises(InputError):
        truncate_family(F, 4)

from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, strategies as st

from cosegal.errors import InputError
from cosegal.fincat import (FinCategory, FinFunctor, Surjection, build_coarse_category, compose_surjections,
                            compose_values, identity_surjection, iter_admissible, normalize_presentation,
                            rewrite_presentation, sigma_generator, upsilon_hom, validate_category,
                            validate_functor)


@st.composite
def surjections(draw, max_m=7):
    m = draw(st.integers(1, max_m))
    steps = draw(st.lists(st.booleans(), min_size=m - 1, max_size=m - 1))
    vals, cur = [0], 0
    for s in steps:
        cur += s
        vals.append(cur)
    return Surjection(tuple(vals), cur + 1)


def test_coarse_category_is_valid():
    c = build_coarse_category("ABC")
    assert not validate_category(c)
    assert len(c.morphisms) == 9
    assert c.hom("A", "C") == [("A", "C")]


def test_category_json_round_trip_infers_identities():
    c = build_coarse_category("AB")
    data = c.to_json()
    expected = data.pop("identities")
    back = FinCategory.from_json(data)
    assert back.identities == expected
    assert not validate_category(back)


def test_broken_category_reports_associativity_free_defects():
    c = build_coarse_category("AB")
    c.compose[(("A", "B"), ("B", "A"))] = ("A", "B")
    assert "compose-ill-typed" in validate_category(c).kinds()


def test_functor_validation():
    c = build_coarse_category("AB")
    ident = FinFunctor(c, c, {o: o for o in c.objects}, {f: f for f in c.morphisms})
    assert not validate_functor(ident)
    swap = dict(ident.morphism_map)
    swap[("A", "B")] = ("B", "A")
    assert validate_functor(FinFunctor(c, c, ident.object_map, swap))


@pytest.mark.parametrize("values,n", [((1, 1), 2), ((0, 2), 3), ((), 1), ((0, 0), 2)])
def test_surjection_rejects_bad_values(values, n):
    with pytest.raises(InputError):
        Surjection(values, n)


def test_hom_sizes_are_binomial():
    for m in range(1, 9):
        for n in range(1, m + 1):
            assert len(upsilon_hom(m, n)) == comb(m - 1, n - 1)
    assert upsilon_hom(2, 3) == []


def test_simplicial_identity_example():
    # sigma_1 sigma_0 = sigma_0 sigma_2 on 4 -> 2
    lhs = compose_values(sigma_generator(2, 1), sigma_generator(3, 0))
    rhs = compose_values(sigma_generator(2, 0), sigma_generator(3, 2))
    assert lhs == rhs == Surjection((0, 0, 1, 1), 2)


@given(surjections())
def test_normal_form_presents_the_map(f):
    p = normalize_presentation(f)
    assert p.is_admissible()
    assert p.compose() == f


@given(surjections(), st.data())
def test_rewriting_agrees_with_values(f, data):
    gs = upsilon_hom(f.n, data.draw(st.integers(1, f.n)))
    g = data.draw(st.sampled_from(gs))
    gf = compose_surjections(g, f)
    assert gf == compose_values(g, f)
    assert rewrite_presentation(normalize_presentation(g), normalize_presentation(f)) == normalize_presentation(gf)


@given(surjections())
def test_identity_is_neutral(f):
    assert compose_values(identity_surjection(f.n), f) == f
    assert compose_values(f, identity_surjection(f.m)) == f


def test_admissible_strings_count():
    assert sum(1 for _ in iter_admissible(5, 3)) == len(upsilon_hom(5, 3))


def test_surjection_json():
    f = Surjection((0, 0, 1), 2)
    assert Surjection.from_json(f.to_json()) == f
    with pytest.raises(InputError):
        Surjection.from_json({"values": [0, 0], "n": 1, "m": 3})

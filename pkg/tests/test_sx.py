from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from cosegal.errors import InputError
from cosegal.fincat import validate_category
from cosegal.sx import (all_chains, binary_cuts, canonical_map_u_t, chain_key, chain_maps_between,
                        chain_maps_from, compose_maps, concat_all, dec_enumerate, dec_of_map, degree,
                        generator_map, grothendieck_category, identity_map, latching_category,
                        parse_chain, presentation_steps, split_map, respects_cuts, tensor_maps,
                        ternary_cuts)

chains = st.lists(st.sampled_from("ABC"), min_size=2, max_size=6).map(tuple)


def test_chain_keys_round_trip():
    t = parse_chain("A.B.C")
    assert t == ("A", "B", "C") and chain_key(t) == "A.B.C" and degree(t) == 2
    with pytest.raises(InputError):
        parse_chain("A")


def test_all_chains_counts():
    # 2 labels, degrees 1..3: 4 + 8 + 16
    assert len(all_chains("AB", 3)) == 28


@given(chains)
def test_dec_cardinality_and_concatenation(t):
    decs = dec_enumerate(t)
    assert len(decs) == 2 ** (degree(t) - 1)
    assert decs[0] == (t,)
    assert all(concat_all(d) == t for d in decs)


def test_cuts():
    t = ("A", "B", "C", "D")
    assert binary_cuts(t) == [(("A", "B"), ("B", "C", "D")), (("A", "B", "C"), ("C", "D"))]
    assert ternary_cuts(t) == [(("A", "B"), ("B", "C"), ("C", "D"))]


def test_generator_deletes_interior_label():
    u = generator_map(("A", "B", "C", "D"), 1)
    assert u.target == ("A", "B", "D")
    assert canonical_map_u_t(("A", "B", "C", "D")).target == ("A", "D")


@given(chains)
@settings(max_examples=40)
def test_chain_maps_compose_and_present(t):
    for u in chain_maps_from(t):
        steps = presentation_steps(u)
        cur = identity_map(t)
        for c, i in steps:
            assert cur.target == c
            cur = compose_maps(generator_map(c, i), cur)
        assert cur == u
        for v in chain_maps_from(u.target):
            assert compose_maps(v, u).target == v.target


def test_chain_maps_between():
    t = ("A", "B", "A", "B")
    assert len(chain_maps_between(t, ("A", "B"))) == 1
    assert len(chain_maps_between(t, ("A", "B", "B"))) == 1


@given(chains, st.data())
@settings(max_examples=40)
def test_dec_of_map_is_compatible(t, data):
    u = data.draw(st.sampled_from(chain_maps_from(t)))
    d = data.draw(st.sampled_from(dec_enumerate(u.target)))
    src, parts = dec_of_map(u, d)
    assert concat_all(src) == t
    assert tensor_maps(parts) == u
    assert tuple(p.target for p in parts) == d
    assert respects_cuts(u, src) and split_map(u, src) == parts


@pytest.mark.parametrize("n,expected", [(2, 2), (3, 8), (4, 26)])
def test_latching_category_sizes(n, expected):
    z = tuple("ABCDE"[: n + 1])
    assert len(latching_category(z).objects) == expected


def test_latching_composition_closed():
    cat = latching_category(("A", "B", "C", "D"))
    keys = {(m.src, m.tgt, m.grouping, m.v) for m in cat.morphisms}
    out_of: dict = {}
    for m in cat.morphisms:
        out_of.setdefault(m.src, []).append(m)
    for m1 in cat.morphisms:
        for m2 in out_of.get(m1.tgt, []):
            c = cat.compose(m2, m1)
            assert (c.src, c.tgt, c.grouping, c.v) in keys


def test_grothendieck_category_is_a_category():
    c = grothendieck_category("AB", "A", "B", 2)
    assert not validate_category(c)

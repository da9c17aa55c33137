from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from cosegal.base import (ConeDiagram, FinMap, FinSetBase, ModelData, coherent_pushout, find_bijection,
                          iterated_cone_colimit, verify_universal_property)
from cosegal.errors import InputError
from cosegal.suite import random_coherent_system

B = FinSetBase()


@st.composite
def maps(draw, max_src=3, max_tgt=3, src=None, tgt=None):
    n = draw(st.integers(0, max_src)) if src is None else src
    m = draw(st.integers(1 if n else 0, max_tgt)) if tgt is None else tgt
    return FinMap(n, m, tuple(draw(st.integers(0, m - 1)) for _ in range(n)))


@st.composite
def spans(draw):
    f = draw(maps())
    g = draw(maps(src=f.src))
    return f, g


def test_finmap_rejects_out_of_range():
    with pytest.raises(InputError):
        FinMap(2, 1, (0, 1))
    with pytest.raises(InputError):
        FinMap.from_json({"src": 1, "tgt": 1})


def test_tensor_is_row_major():
    f = FinMap(2, 2, (1, 0))
    g = FinMap(1, 3, (2,))
    assert B.tensor_map(f, g).map == (5, 2)
    assert B.tensor(2, 3) == 6


@given(spans())
@settings(max_examples=40, deadline=None)
def test_pushout_universal_property(span):
    f, g = span
    po = B.pushout(f, g)
    assert not verify_universal_property("pushout", po, (f, g), B, max_apex=2)


@given(maps(max_src=3, max_tgt=3), st.data())
@settings(max_examples=40, deadline=None)
def test_coequalizer_universal_property(f, data):
    g = data.draw(maps(src=f.src, tgt=f.tgt))
    co = B.coequalizer(f, g)
    assert B.is_surjective(co.legs[1])
    assert not verify_universal_property("coequalizer", co, (f, g), B, max_apex=2)


def test_wrong_candidate_is_rejected():
    f = FinMap(1, 1, (0,))
    g = FinMap(1, 2, (0,))
    fake = B.coproduct([1, 1, 2])
    fake.legs[0] = FinMap(1, 4, (0,))
    with pytest.raises(InputError):
        verify_universal_property("pushout", fake, (f, g), B)
    # adding a junk element keeps the cocone commutative but breaks uniqueness
    po = B.pushout(f, g)
    inc = FinMap(po.obj, po.obj + 1, tuple(range(po.obj)))
    junk = type(po)(po.obj + 1, [B.compose(inc, leg) for leg in po.legs])
    rep = verify_universal_property("pushout", junk, (f, g), B, max_apex=2)
    assert "non-unique" in rep.kinds()


@given(st.lists(maps(max_src=2, max_tgt=2, src=2), min_size=1, max_size=3))
@settings(max_examples=30, deadline=None)
def test_cone_colimit_matches_iterated_pushouts(legs):
    cone = ConeDiagram(2, tuple(legs))
    direct = B.cone_colimit(cone)
    staged = iterated_cone_colimit(B, cone)
    assert direct.obj == staged.obj
    iso = find_bijection(staged.obj, direct.obj, list(zip(staged.legs, direct.legs)))
    assert iso is not None


def test_find_bijection_counts():
    ident = B.identity(3)
    assert find_bijection(3, 3, [], count=True) == 6
    assert find_bijection(3, 3, [(FinMap(1, 3, (0,)), FinMap(1, 3, (2,)))], count=True) == 2
    assert find_bijection(3, 3, [(ident, FinMap(3, 3, (0, 0, 1)))]) is None


def test_rlp_characterises_bijections():
    md = ModelData(B)
    for a in range(3):
        for b in range(3):
            for f in B.hom(a, b):
                assert md.has_rlp(f) == B.is_iso(f)


def test_factorisation_is_cof_then_trivial_fibration():
    md = ModelData(B)
    f = FinMap(2, 3, (0, 0))
    h, j = md.factor_cof_trivfib(f)
    assert B.compose(j, h) == f and md.is_trivial_fibration(j) and md.is_cof(h)


@pytest.mark.parametrize("seed", range(10))
def test_coherent_pushout_staged_equals_direct(seed):
    rng = random.Random(seed)
    S = random_coherent_system(rng)
    assert not S.validate(B)
    moves = [FinMap(n, 2, tuple(rng.randrange(2) for _ in range(n))) for n in (S.m1, S.m2, S.m3)]
    res = coherent_pushout(S, *moves)
    assert B.is_iso(res.iso)
    assert not res.system.validate(B)


def test_coherent_pushout_rejects_incoherent_system():
    rng = random.Random(1)
    S = random_coherent_system(rng)
    broken = type(S)(*[getattr(S, k) for k in ("m1", "m2", "m3", "m12", "m23", "m", "phi12", "phi23",
                                                "phi1_23", "phi12_3")],
                     FinMap(S.phi.src, S.phi.tgt, tuple((x + 1) % S.phi.tgt for x in S.phi.map)))
    if S.phi.tgt > 1:
        with pytest.raises(InputError):
            coherent_pushout(broken, B.identity(S.m1), B.identity(S.m2), B.identity(S.m3))

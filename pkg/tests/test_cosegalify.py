from __future__ import annotations

import json
import random
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from cosegal.base import FinMap, FinSetBase, ModelData
from cosegal.cosegalify import (ArrowObject, ArrowSquare, compare_with_words, cosegalify_global,
                                count_pr_adjunction, glue_local, h_over, horn_fills, kan_extension,
                                kan_map, kan_transpose, s_t_infinity, square_has_lift,
                                three_part_formula, word_counts)
from cosegal.errors import ConvergenceError, InputError
from cosegal.freelax import degree_one_family, gamma
from cosegal.laxdiag import (family_from_json, is_cosegal, semicat_to_diagram, underlying_family,
                             validate_diagram, validate_family, validate_transformation)
from cosegal.samples import all_support, random_lax_diagram
from cosegal.suite import coarse_semicategory, z2_semicategory
from cosegal.sx import canonical_map_u_t, degree

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
B = FinSetBase()
MD = ModelData(B)
maps = st.integers(0, 3).flatmap(
    lambda n: st.integers(1, 3).flatmap(
        lambda m: st.lists(st.integers(0, m - 1), min_size=n, max_size=n).map(
            lambda xs: FinMap(n, m, tuple(xs)))))


def test_kan_extension_differs_from_three_part_formula():
    t = ("A", "B", "C")
    a = ArrowObject(FinMap(1, 2, (0,)))
    L = kan_extension(t, a, "ABC", 2)
    assert L.values[t] == 2 and three_part_formula(t, a, t) == 4
    # no chain map from the endpoint chain to t, so only the U copy survives
    assert L.values[("A", "C")] == 1
    assert not validate_family(L)
    with pytest.raises(InputError):
        kan_extension(("A", "B"), a, "AB", 2)


@settings(max_examples=40, deadline=None)
@given(maps, maps)
def test_horn_filling_matches_direct_lifting(i, p):
    for top in B.hom(i.src, p.src):
        for bottom in B.hom(i.tgt, p.tgt):
            if B.compose(p, top) == B.compose(bottom, i):
                assert horn_fills(i, p, top, bottom) == square_has_lift(i, p, top, bottom)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000), maps)
def test_pr_shriek_is_left_adjoint(seed, h):
    F = random_lax_diagram("AB", 2, random.Random(seed), max_size=2)
    t = ("A", "A", "B")
    left, right = count_pr_adjunction(t, ArrowObject(h), F)
    assert left == right


def test_kan_map_and_transpose_are_natural():
    t = ("A", "B", "B")
    a = ArrowObject(FinMap(2, 1, (0, 0)))
    sq = h_over(a)
    L1 = kan_extension(t, a, "AB", 3)
    L2 = kan_extension(t, sq.target, "AB", 3)
    assert not validate_transformation(kan_map(sq, L1, L2), laxity=False)
    F = random_lax_diagram("AB", 3, random.Random(2), support=all_support("AB"))
    f = F.act(canonical_map_u_t(t))
    h, j = MD.factor_cof_trivfib(f)
    a2 = ArrowObject(h)
    L = kan_extension(t, a2, "AB", 3)
    tr = kan_transpose(L, underlying_family(F), ArrowSquare(a2, ArrowObject(f), B.identity(h.src), j))
    assert not validate_transformation(tr, laxity=False)


def _failing(F):
    return [t for t in F.chains() if degree(t) >= 2 and not MD.is_weq(F.act(canonical_map_u_t(t)))]


def test_local_gluing_reaches_lifting_property():
    F = gamma(degree_one_family("ABC", 2, {("A", "B"): 1, ("B", "C"): 1}))
    t = ("A", "B", "C")
    assert t in _failing(F)
    S, _, stage = glue_local(F, t, MD)
    assert not validate_diagram(S)
    assert not stage.rlp_before
    S2, e, trace = s_t_infinity(F, t, MD)
    assert trace.converged and MD.has_rlp(S2.act(canonical_map_u_t(t)))
    assert not validate_transformation(e)


@pytest.mark.parametrize("F", [
    gamma(degree_one_family("ABC", 2, {("A", "B"): 1, ("B", "C"): 1})),
    gamma(degree_one_family("AB", 3, {("A", "B"): 2})),
    random_lax_diagram("AB", 2, random.Random(5)),
    random_lax_diagram("ABC", 2, random.Random(6), max_size=1),
])
def test_global_cosegalification(F):
    S, eta, trace = cosegalify_global(F)
    assert trace.converged and is_cosegal(S)
    assert not validate_diagram(S)
    assert not validate_transformation(eta)


@pytest.mark.parametrize("A", [z2_semicategory(), coarse_semicategory("AB")])
def test_cosegal_input_is_fixed(A):
    F = semicat_to_diagram(A, 3)
    S, eta, trace = cosegalify_global(F)
    assert trace.rounds == [] and eta.is_levelwise(B.is_iso)


def test_looping_input_diverges():
    F = family_from_json(json.loads((CORPUS / "loop_diverges.json").read_text()))
    with pytest.raises(ConvergenceError) as err:
        cosegalify_global(F)
    assert "diverges" in str(err.value)
    assert err.value.trace is not None and not err.value.trace.converged


def test_round_cap_is_enforced():
    F = gamma(degree_one_family("ABC", 2, {("A", "B"): 1, ("B", "C"): 1}))
    with pytest.raises(ConvergenceError):
        cosegalify_global(F, cap=0)


def test_comparison_with_words():
    X = degree_one_family("ABC", 2, {("A", "B"): 1, ("B", "C"): 1, ("A", "C"): 1})
    assert word_counts(X)[("A", "C")] == 2
    out = compare_with_words(X)
    assert out["strictified"]["A.C"] == 2 and out["equal_sizes"]
    loop = degree_one_family("A", 2, {("A", "A"): 1})
    assert word_counts(loop) is None

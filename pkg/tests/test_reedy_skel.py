from __future__ import annotations

import random

from hypothesis import given, settings, strategies as st

from cosegal.freelax import degree_one_family, gamma, gamma_map, pushout_free, theta_inverse
from cosegal.laxdiag import (Family, constant_diagram, count_morphisms, find_isomorphism,
                             underlying_family, validate_diagram, validate_transformation)
from cosegal.reedy_skel import (adjoint_transpose, colimit_laxg, colimit_mediators,
                                count_skeleton_adjunction, free_latching_comparison, laxlatch,
                                latching_counit, skeleton, skeleton_counit, skeleton_reproduces,
                                skeleton_triangles, truncate, validate_latch_functor)
from cosegal.samples import all_support, random_family, random_lax_diagram, random_morphism
from cosegal.sx import all_chains, degree

seeds = st.integers(0, 10_000)


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_latching_functor_is_a_functor(seed):
    G = random_lax_diagram("AB", 2, random.Random(seed))
    for z in all_chains("AB", 3):
        if degree(z) == 3:
            assert not validate_latch_functor(G, z)


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_skeleton_is_valid_and_extends(seed):
    G = random_lax_diagram("AB", 2, random.Random(seed), support=all_support("AB"))
    S = skeleton(G)
    assert S.max_degree == 3 and not validate_diagram(S, exhaustive=True)
    assert all(S.values[t] == G.values[t] for t in G.chains())
    for z in S.chains():
        if degree(z) == 3:
            assert S.values[z] == laxlatch(G, z).obj


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_skeleton_adjunction_counts_and_triangles(seed):
    rng = random.Random(seed)
    G = random_lax_diagram("AB", 1, rng, support=all_support("AB"))
    H = random_lax_diagram("AB", 2, rng)
    left, right = count_skeleton_adjunction(G, H)
    assert left == right
    assert not skeleton_triangles(G, H)
    assert not validate_transformation(skeleton_counit(H))
    sigma = random_morphism(G, truncate(H, 1), rng)
    if sigma is not None:
        tr = adjoint_transpose(sigma, H)
        assert not validate_transformation(tr)
        assert all(tr[t] == sigma[t] for t in G.chains())


def test_latching_counit_is_identity_on_skeleton():
    G = random_lax_diagram("AB", 2, random.Random(3))
    S = skeleton(G)
    B = S.base
    for z in S.chains():
        if degree(z) == 3:
            assert latching_counit(S, z) == B.identity(S.values[z])


@settings(max_examples=8, deadline=None)
@given(seeds)
def test_colimit_of_a_span_is_universal(seed):
    rng = random.Random(seed)
    X0 = random_lax_diagram("AB", 2, rng, max_size=1)
    X1 = random_lax_diagram("AB", 2, rng)
    X2 = random_lax_diagram("AB", 2, rng)
    f = random_morphism(X0, X1, rng)
    g = random_morphism(X0, X2, rng)
    if f is None or g is None:
        return
    arrows = [(0, 1, f), (0, 2, g)]
    res = colimit_laxg([X0, X1, X2], arrows)
    assert not validate_diagram(res.diagram)
    for leg in res.legs:
        assert not validate_transformation(leg)
    B = X0.base
    for t in X0.chains():
        assert B.compose(res.legs[1][t], f[t]) == B.compose(res.legs[2][t], g[t])
    K = random_lax_diagram("AB", 2, rng, support=all_support("AB"))
    if count_morphisms(X1, K, limit=101) <= 100 and count_morphisms(X2, K, limit=101) <= 100:
        assert not colimit_mediators(res, [X0, X1, X2], arrows, K, max_cocones=50)


def test_colimit_of_single_diagram_is_itself():
    X = random_lax_diagram("AB", 2, random.Random(0))
    res = colimit_laxg([X], [])
    assert find_isomorphism(X, res.diagram) is not None
    assert isinstance(res.diagram, Family)


def test_latching_object_of_singletons_and_empty():
    # one point from the action out of the endpoint chain, one from laxity; nothing identifies them
    for z in [("A", "B", "C"), ("A", "A", "B"), ("A", "B", "A")]:
        assert laxlatch(constant_diagram("ABC", 1, 1), z).obj == 2
        assert laxlatch(constant_diagram("ABC", 1, 0), z).obj == 0
    assert skeleton(constant_diagram("AB", 1, 0)).values == constant_diagram("AB", 2, 0).values


def test_truncations_compose():
    F = random_lax_diagram("AB", 3, random.Random(9))
    for m, k in [(3, 2), (2, 1), (3, 1)]:
        a = truncate(truncate(F, m), k)
        b = truncate(F, min(m, k))
        assert (a.values, a.actions, a.laxity) == (b.values, b.actions, b.laxity)
    assert truncate(F, 3).values == F.values


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_counit_restricts_to_classical_latching_map(seed):
    F = random_lax_diagram("AB", 3, random.Random(seed), support=all_support("AB"))
    for z in F.chains():
        if degree(z) < 2:
            continue
        latch = laxlatch(truncate(F, degree(z) - 1), z)
        eps = latching_counit(F, z, latch)
        for g in latch.objects:
            if len(g.blocks) == 1:
                assert F.base.compose(eps, latch.leg(g)) == F.act(g.u)


def test_coproduct_is_levelwise_in_degree_one():
    rng = random.Random(12)
    X1 = random_lax_diagram("AB", 2, rng)
    X2 = random_lax_diagram("AB", 2, rng)
    res = colimit_laxg([X1, X2], [])
    for t in X1.chains():
        if degree(t) == 1:
            assert res.diagram.values[t] == X1.values[t] + X2.values[t]
    assert not validate_diagram(res.diagram)


@settings(max_examples=8, deadline=None)
@given(seeds)
def test_colimit_agrees_with_pushout_along_free_maps(seed):
    rng = random.Random(seed)
    A = random_family("AB", 2, rng, max_size=1)
    Bf = random_family("AB", 2, rng, max_size=1)
    F = random_lax_diagram("AB", 2, rng)
    pi = random_morphism(A, underlying_family(F), rng, laxity=False)
    alpha = random_morphism(A, Bf, rng, laxity=False)
    if pi is None or alpha is None:
        return
    GA, GB = gamma(A), gamma(Bf)
    sigma = theta_inverse(pi, F, GA)
    ga = gamma_map(alpha, GA, GB)
    direct = pushout_free(alpha, sigma, GA=GA, GB=GB).diagram
    via = colimit_laxg([GA, F, GB], [(0, 1, sigma), (0, 2, ga)]).diagram
    assert find_isomorphism(direct, via) is not None


def test_free_comparisons_are_recorded():
    G = gamma(degree_one_family("ABC", 3, {("A", "B"): 1, ("B", "C"): 1}))
    cmp = free_latching_comparison(G)
    assert cmp["A.B.C"] == {"latch": 1, "value": 1, "iso": True}
    rep = skeleton_reproduces(G)
    assert set(rep) == {"skeleton", "diagram", "isomorphic"} and rep["isomorphic"]

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from cosegal.base import FinMap
from cosegal.errors import InputError, PreconditionError
from cosegal.freelax import (check_monad_laws, coequalizer_split, counit, degree_one_family,
                             dirac_family, eta, family_coproduct, finitary_smoke_test, gamma,
                             gamma_inductive_iso, gamma_map, gamma_nested_size, is_precongruence_congruence,
                             monad_mu, pushout_free, pushout_mediators, representable, theta,
                             theta_inverse)
from cosegal.laxdiag import (Transformation, count_morphisms, enumerate_morphisms, underlying_family,
                             validate_diagram, validate_family, validate_transformation)
from cosegal.samples import all_support, random_family, random_lax_diagram, random_morphism
from cosegal.sx import degree
from cosegal.suite import coequalizer_mediators, permuted_family, split_pair_instance

seeds = st.integers(0, 10_000)


def test_gamma_of_constant_family_counts_decompositions():
    X = degree_one_family("A", 5, {("A", "A"): 1})
    G = gamma(X)
    for t in G.chains():
        assert G.values[t] == 2 ** (degree(t) - 1)
    assert not validate_diagram(G, exhaustive=True)


def test_nested_reading_overcounts():
    # the literal nested sum counts a decomposition once per way of grouping it
    X = degree_one_family("A", 4, {("A", "A"): 1})
    G = gamma(X)
    t = ("A",) * 4
    assert G.values[t] == 4 and gamma_nested_size(X, t) == 6


@settings(max_examples=20, deadline=None)
@given(seeds, st.integers(1, 4))
def test_gamma_is_valid_and_recursive_presentation_matches(seed, N):
    rng = random.Random(seed)
    X = random_family("AB", N, rng, support=all_support("AB"))
    G = gamma(X)
    assert not validate_diagram(G)
    for t in G.chains():
        gamma_inductive_iso(X, G, t)
    assert not validate_transformation(eta(X, G), laxity=False)


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_theta_is_a_bijection(seed):
    rng = random.Random(seed)
    X = random_family("AB", 2, rng, max_size=1)
    F = random_lax_diagram("AB", 2, rng)
    G = gamma(X)
    UF = underlying_family(F)
    lax = list(enumerate_morphisms(G, F, limit=200))
    fam = list(enumerate_morphisms(X, UF, laxity=False, limit=200))
    if len(lax) < 200 and len(fam) < 200:
        assert len(lax) == len(fam)
    for comps in fam[:20]:
        pi = Transformation(X, UF, comps)
        sigma = theta_inverse(pi, F, G)
        assert not validate_transformation(sigma)
        assert theta(sigma).components == pi.components
    for comps in lax[:20]:
        sigma = Transformation(G, F, comps)
        assert theta_inverse(theta(sigma), F, G).components == sigma.components


def test_theta_needs_free_source():
    F = random_lax_diagram("AB", 2, random.Random(0))
    ident = Transformation(F, F, {t: F.base.identity(F.values[t]) for t in F.chains()})
    with pytest.raises(InputError):
        theta(ident)


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_monad_laws(seed):
    X = random_family("AB", 2, random.Random(seed), support=all_support("AB"))
    assert not check_monad_laws(X, finitary_steps=2)


def test_counit_and_multiplication_are_morphisms():
    F = random_lax_diagram("AB", 3, random.Random(4))
    assert not validate_transformation(counit(F))
    X = random_family("AB", 2, random.Random(4))
    assert not validate_transformation(monad_mu(X), laxity=False)


def test_finitary_smoke_test_sizes():
    X = degree_one_family("AB", 2, {("A", "B"): 1, ("A", "A"): 1})
    res = finitary_smoke_test(X, steps=2)
    assert res and res.sizes_colim_of_T == res.sizes_T_of_colim


def test_gamma_map_is_functorial():
    rng = random.Random(8)
    X = random_family("AB", 2, rng)
    Y = family_coproduct(X, X)
    incl = Transformation(X, Y, {t: FinMap(X.values[t], Y.values[t], tuple(range(X.values[t])))
                                 for t in X.chains()})
    g = gamma_map(incl)
    assert not validate_transformation(g)
    ident = Transformation(X, X, {t: X.base.identity(X.values[t]) for t in X.chains()})
    assert all(gamma_map(ident)[t] == X.base.identity(g.source.values[t]) for t in X.chains())


def test_dirac_and_representable():
    X = dirac_family("AB", 3, ("A", "B", "B"), 1)
    assert not validate_family(X)
    assert X.values[("A", "B")] == 0 and X.values[("A", "B", "B")] == 1
    assert X.values[("A", "A", "B", "B")] == 1 and X.values[("A", "B", "B", "B")] == 2
    R = representable(1, 1, 2)
    assert not validate_diagram(R)
    with pytest.raises(InputError):
        representable(3, 1, 2)


@settings(max_examples=8, deadline=None)
@given(seeds)
def test_split_coequalizer_is_universal(seed):
    rng = random.Random(seed)
    inst = split_pair_instance(rng)
    if inst is None:
        return
    F, s1, s2, p = inst
    E, L = coequalizer_split(s1, s2, p)
    assert not validate_diagram(E)
    assert not validate_transformation(L)
    assert is_precongruence_congruence(s1, s2)
    K = random_lax_diagram("AB", 2, rng, support=all_support("AB"))
    if count_morphisms(F, K, limit=301) <= 300:
        ok, _ = coequalizer_mediators(E, L, s1, s2, K)
        assert ok


def test_coequalizer_rejects_unsplit_pair():
    inst = split_pair_instance(random.Random(1))
    F, s1, s2, p = inst
    bad = Transformation(p.source, p.target, {t: FinMap(p[t].src, p[t].tgt, (0,) * p[t].src)
                                              for t in F.chains()})
    if any(F.values[t] > 1 for t in F.chains()):
        with pytest.raises(PreconditionError):
            coequalizer_split(s1, s2, bad)


@settings(max_examples=8, deadline=None)
@given(seeds, st.booleans())
def test_pushout_along_free_maps(seed, along_bijection):
    rng = random.Random(seed)
    A = random_family("AB", 2, rng, max_size=1)
    F = random_lax_diagram("AB", 2, rng)
    pi = random_morphism(A, underlying_family(F), rng, laxity=False)
    if pi is None:
        return
    GA = gamma(A)
    sigma = theta_inverse(pi, F, GA)
    if along_bijection:
        Bfam, alpha = permuted_family(A, rng)
    else:
        Bfam = random_family("AB", 2, rng)
        alpha = random_morphism(A, Bfam, rng, laxity=False)
        if alpha is None:
            return
    GB = gamma(Bfam)
    res = pushout_free(alpha, sigma, GA=GA, GB=GB)
    assert not validate_diagram(res.diagram)
    assert not validate_transformation(res.H) and not validate_transformation(res.K)
    if along_bijection:
        assert res.H.is_levelwise(F.base.is_iso)
    K = random_lax_diagram("AB", 2, rng, support=all_support("AB"))
    if count_morphisms(F, K, limit=201) <= 200:
        assert not pushout_mediators(res, sigma, gamma_map(alpha, GA, GB), K)

from __future__ import annotations

import itertools
import json
import random

import pytest

from cosegal import operads as op
from cosegal.errors import InputError, PreconditionError
from cosegal.suite import _free_lax_cases, _lax_o_cases


@pytest.mark.parametrize("n", [1, 2, 3])
def test_ox_operation_counts(n):
    X = "ABC"[:n]
    O = op.build_ox(X)
    # one operation per path of length 1..3, plus a nullary one per point
    assert len(O.ops) == sum(n ** (k + 1) for k in range(1, 4)) + n
    assert len(O.colors) == n * n
    assert not op.validate_operad(O)
    assert len(op.build_ox(X, nullary=False).ops) == len(O.ops) - n


def test_ox_rejects_empty_set():
    with pytest.raises(InputError):
        op.build_ox("")


def test_z2_operad_and_broken_variant():
    assert not op.validate_operad(op.z2_operad())
    assert not op.validate_operad(op.associative_operad(3))
    assert "associativity" in op.validate_operad(op.z2_operad(broken=True)).kinds()


def test_partial_substitution_is_reported():
    O = op.z2_operad(2, nullary=False)
    key = next(iter(O.gamma))
    O.gamma[key] = dict(list(O.gamma[key].items())[1:])
    assert "substitution-partial" in op.validate_operad(O).kinds()


@pytest.mark.parametrize("T", [op.coarse_twocat("AB"), op.z2_twocat(), op.max_twocat()])
def test_twocategory_algebra_round_trip(T):
    assert not op.validate_twocategory(T)
    M = op.twocat_to_algebra(T)
    assert not op.validate_algebra(M)
    assert op.algebra_to_twocat(M) == T
    assert op.twocat_from_json(json.loads(json.dumps(op.twocat_to_json(T)))) == T


def test_operad_json_round_trip():
    for O in (op.build_ox("AB"), op.z2_operad(2)):
        back = op.operad_from_json(json.loads(json.dumps(op.operad_to_json(O))))
        assert back.colors == O.colors and back.units == O.units and back.gamma == O.gamma
        assert set(back.ops) == set(O.ops)


def test_category_json_round_trip():
    c = op.poset_category([0, 1, 2], lambda a, b: a <= b)
    back = op.category_from_json(json.loads(json.dumps(op.category_to_json(c))))
    assert back.morphisms == c.morphisms and back.identities == c.identities


def test_twocat_json_missing_entries():
    d = op.twocat_to_json(op.z2_twocat())
    d["comp"] = []
    with pytest.raises(InputError):
        op.twocat_from_json(d)


def test_lax_o_fixtures_and_planted_defects():
    valid, defects = _lax_o_cases()
    for F in valid:
        assert not op.validate_lax_o(F)
    for G, F in itertools.product(valid, repeat=2):
        if G.source is F.target:
            assert not op.validate_lax_o(op.compose_lax_o(G, F))
    for kind, F in defects:
        assert kind in op.validate_lax_o(F).kinds()


def test_swap_laxity_squares_to_identity():
    Z = op.twocat_to_algebra(op.z2_twocat())
    same_obj = {i: {o: o for o in c.objects} for i, c in Z.cats.items()}
    same_mor = {i: {f: f for f in c.morphisms} for i, c in Z.cats.items()}
    L = op.lax_o_from_rule(Z, Z, same_obj, same_mor, lambda s, x, cs: (len(s[0]) - 1) % 2)
    assert op.lax_o_equal(op.compose_lax_o(L, L), op.identity_lax_o(Z))


def test_identity_transformation_of_lax_morphism():
    P = op.twocat_to_algebra(op.max_twocat())
    F = op.identity_lax_o(P)
    ids = {i: {o: c.identities[o] for o in c.objects} for i, c in P.cats.items()}
    s = op.LaxOTransformation(F, F, ids)
    assert not op.validate_lax_o_transformation(s)
    assert op.compose_lax_o_transformations(s, s).components == ids


@pytest.mark.parametrize("T", [op.coarse_twocat("AB"), op.z2_twocat(), op.max_twocat()])
def test_grothendieck_operad(T):
    M = op.twocat_to_algebra(T)
    G, p = op.grothendieck_operad(M)
    assert not op.validate_operad(G)
    assert not op.validate_operad_morphism(p)


def test_identity_reflection():
    assert op.check_iro(op.twocat_to_algebra(op.coarse_twocat("AB")))[0]
    ok, witness = op.check_iro(op.twocat_to_algebra(op.z2_twocat()))
    assert not ok and witness is not None


def test_free_algebra_needs_discrete_operations():
    arrow = op.poset_category([0, 1], lambda a, b: a <= b)
    O = op.ColoredOperad(("*",), {(("*",), "*"): arrow}, {"*": 0}, {}, 1)
    with pytest.raises(PreconditionError):
        op.free_algebra(O, {"*": ["g"]})


def test_free_lax_morphisms_are_valid_and_adjoint():
    for name, C, sizes, G in itertools.islice(_free_lax_cases(random.Random(0)), 10):
        assert not op.validate_set_lax(G)
        left, right = op.count_free_adjunction(C, sizes, G)
        assert left == right, name


def test_free_algebra_object_counts():
    C = op.free_algebra(op.associative_operad(3), {"*": ["g"]})
    # one word per length 1..3
    assert len(C.cats["*"].objects) == 3
    assert len(op.presentations(C, "*", ((("*",) * 3, "*"), "*", ("g",) * 3))) >= 1

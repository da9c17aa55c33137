"""Truncation, lax-latching objects, skeleta and degreewise colimits.

The lax-latching object of ``G`` at a chain ``z`` is the colimit, over the
latching category of ``z``, of ``(a, u) -> G(a_1) (x) ... (x) G(a_n)``.  It
records every way an element at ``z`` can be produced from lower degrees:
by an action (one block) or by laxity (several blocks).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .base import Colimit, FinMap
from .errors import InputError
from .laxdiag import LaxDiagram, Transformation, enumerate_morphisms, truncate_family
from .report import Report
from .sx import (Chain, LatchMorphism, LatchObject, all_chains, binary_cuts, chain_key,
                 degree, generator_map, identity_map, latching_category)


def truncate(F: LaxDiagram, m: int) -> LaxDiagram:
    """Restriction to chains of degree at most ``m``."""
    return truncate_family(F, m)


@dataclass
class LaxLatchingObject:
    z: Chain
    objects: list            # latching objects (a, u)
    colimit: Colimit

    @property
    def obj(self) -> int:
        return self.colimit.obj

    def leg(self, gamma: LatchObject) -> FinMap:
        return self.colimit.legs[self._index[gamma]]

    def __post_init__(self):
        self._index = {o: i for i, o in enumerate(self.objects)}


def latch_value(G: LaxDiagram, gamma: LatchObject) -> int:
    return G.base.tensor_objs([G.values[b] for b in gamma.blocks])


def latch_arrow(G: LaxDiagram, cat, m: LatchMorphism) -> FinMap:
    """``L(g, v) = (x)_k G(v_k) o phi_(k-th group)``."""
    B = G.base
    src = cat.objects[m.src]
    parts = []
    for k, v in enumerate(m.v):
        group = [src.blocks[i] for i in m.grouping.fiber(k)]
        parts.append(B.compose(G.act(v), G.lax_many(group)))
    return B.tensor_maps(parts)


def laxlatch(G: LaxDiagram, z: Chain) -> LaxLatchingObject:
    """Colimit of the latching functor of ``G`` at ``z`` (needs ``deg z - 1`` data)."""
    if degree(z) > G.max_degree + 1:
        raise InputError("latching object needs data up to one degree below the chain")
    cat = latching_category(z)
    sizes = [latch_value(G, o) for o in cat.objects]
    arrows = [(m.src, m.tgt, latch_arrow(G, cat, m)) for m in cat.morphisms]
    return LaxLatchingObject(z, list(cat.objects), G.base.colimit(sizes, arrows))


def validate_latch_functor(G: LaxDiagram, z: Chain) -> Report:
    """Composites of latching morphisms exist and ``L`` preserves them."""
    rep = Report()
    cat = latching_category(z)
    B = G.base
    by_key = {(m.src, m.tgt, m.grouping, m.v): m for m in cat.morphisms}
    out_of: dict = {}
    for m in cat.morphisms:
        out_of.setdefault(m.src, []).append(m)
    for m1 in cat.morphisms:
        for m2 in out_of.get(m1.tgt, []):
            c = cat.compose(m2, m1)
            if (c.src, c.tgt, c.grouping, c.v) not in by_key:
                rep.add("composite-missing", chain_key(z), m1.src, m2.tgt)
                continue
            if latch_arrow(G, cat, c) != B.compose(latch_arrow(G, cat, m2), latch_arrow(G, cat, m1)):
                rep.add("latch-functoriality", chain_key(z), m1.src, m1.tgt, m2.tgt)
    return rep


def latching_counit(H: LaxDiagram, z: Chain, latch: LaxLatchingObject | None = None) -> FinMap:
    """``laxlatch(H, z) -> H(z)`` assembled from ``H(u) o phi_a``."""
    latch = latch or laxlatch(truncate(H, degree(z) - 1), z)
    B = H.base
    legs = [B.compose(H.act(g.u), H.lax_many(g.blocks)) for g in latch.objects]
    return latch.colimit.mediate_to(H.values[z], legs)


def laxlatch_map(sigma: Transformation, z: Chain, src: LaxLatchingObject | None = None,
                 tgt: LaxLatchingObject | None = None) -> FinMap:
    """Functoriality of the latching object in the diagram."""
    G, G2 = sigma.source, sigma.target
    src = src or laxlatch(G, z)
    tgt = tgt or laxlatch(G2, z)
    B = G.base
    legs = [B.compose(tgt.leg(g), B.tensor_maps([sigma[b] for b in g.blocks])) for g in src.objects]
    return src.colimit.mediate_to(tgt.obj, legs)


def extend_by_latching(G: LaxDiagram, top: dict, degree_top: int) -> LaxDiagram:
    """Add a degree with values ``top[z]`` = latching objects and the induced structure."""
    B = G.base
    values, actions, laxity = dict(G.values), dict(G.actions), dict(G.laxity)
    for z, latch in top.items():
        values[z] = latch.obj
        for i in range(degree(z) - 1):
            w = generator_map(z, i)
            actions[(z, i)] = latch.leg(LatchObject((w.target,), w))
        for s, r in binary_cuts(z):
            laxity[(s, r)] = latch.leg(LatchObject((s, r), identity_map(z)))
    return LaxDiagram(G.labels, degree_top, values, actions, B, laxity)


def skeleton(G: LaxDiagram) -> LaxDiagram:
    """``sk_m G``: extend one degree by the lax-latching objects."""
    m = G.max_degree
    top = {z: laxlatch(G, z) for z in all_chains(G.labels, m + 1) if degree(z) == m + 1}
    return extend_by_latching(G, top, m + 1)


def skeleton_counit(H: LaxDiagram) -> Transformation:
    """``sk (tau H) -> H``: identity below the top degree, latching counit on top."""
    m = H.max_degree
    low = truncate(H, m - 1)
    S = skeleton(low)
    comps = {}
    for t in H.chains():
        if degree(t) < m:
            comps[t] = H.base.identity(H.values[t])
        else:
            comps[t] = latching_counit(H, t, laxlatch(low, t))
    return Transformation(S, H, comps)


def adjoint_transpose(sigma: Transformation, H: LaxDiagram) -> Transformation:
    """Given ``sigma: G -> tau H``, the morphism ``sk G -> H``."""
    G = sigma.source
    S = skeleton(G)
    B = G.base
    comps = {}
    for t in S.chains():
        if degree(t) <= G.max_degree:
            comps[t] = sigma[t]
        else:
            tauH = truncate(H, G.max_degree)
            mid = laxlatch_map(Transformation(G, tauH, sigma.components), t)
            comps[t] = B.compose(latching_counit(H, t), mid)
    return Transformation(S, H, comps)


def count_skeleton_adjunction(G: LaxDiagram, H: LaxDiagram) -> tuple[int, int]:
    """``(|Hom(sk G, H)|, |Hom(G, tau H)|)`` by exhaustive enumeration."""
    S = skeleton(G)
    left = sum(1 for _ in enumerate_morphisms(S, H))
    right = sum(1 for _ in enumerate_morphisms(G, truncate(H, G.max_degree)))
    return left, right


def skeleton_triangles(G: LaxDiagram, H: LaxDiagram) -> Report:
    """Both triangle identities of ``sk -| tau`` (the unit is the identity)."""
    rep = Report()
    B = G.base
    S = skeleton(G)
    eps_S = skeleton_counit(S)  # sk tau sk G -> sk G
    for t in S.chains():
        if eps_S[t] != B.identity(S.values[t]):
            rep.add("triangle-sk", chain_key(t))
    eps_H = skeleton_counit(H)
    for t in H.chains():
        if degree(t) < H.max_degree and eps_H[t] != B.identity(H.values[t]):
            rep.add("triangle-tau", chain_key(t))
    return rep


# ---------------------------------------------------------------------------
# colimits of lax diagrams


@dataclass
class LaxColimit:
    diagram: LaxDiagram
    legs: list


def colimit_laxg(diagrams: Sequence[LaxDiagram], arrows: Sequence[tuple]) -> LaxColimit:
    """Colimit of a finite diagram of lax diagrams, built degree by degree.

    Degree 1 is a level-wise colimit.  At a chain ``z`` of higher degree the
    value is the colimit of the diagram formed by the ``X_i(z)``, their
    latching objects and the latching object of the colimit built so far,
    joined by the maps ``X(f)_z``, the latching counits and the induced maps.
    """
    if not diagrams:
        raise InputError("colimit of an empty diagram of lax diagrams needs labels")
    X0 = diagrams[0]
    B = X0.base
    N = X0.max_degree
    values, actions, laxity = {}, {}, {}
    leg_maps: list[dict] = [dict() for _ in diagrams]
    for t in X0.chains():
        if degree(t) == 1:
            col = B.colimit([X.values[t] for X in diagrams], [(i, j, s[t]) for i, j, s in arrows])
            values[t] = col.obj
            for k in range(len(diagrams)):
                leg_maps[k][t] = col.legs[k]
    for d in range(2, N + 1):
        E = LaxDiagram(X0.labels, d - 1, dict(values), dict(actions), B, dict(laxity))
        lows = [truncate(X, d - 1) for X in diagrams]
        for z in X0.chains():
            if degree(z) != d:
                continue
            LE = laxlatch(E, z)
            LX = [laxlatch(X, z) for X in lows]
            n = len(diagrams)
            # objects: X_i(z) (0..n-1), laxlatch(X_i, z) (n..2n-1), laxlatch(E, z) (2n)
            objs = [X.values[z] for X in diagrams] + [L.obj for L in LX] + [LE.obj]
            arr = []
            for i, j, s in arrows:
                arr.append((i, j, s[z]))
                low_s = Transformation(lows[i], lows[j], {t: s[t] for t in lows[i].chains()})
                arr.append((n + i, n + j, laxlatch_map(low_s, z, LX[i], LX[j])))
            for k, X in enumerate(diagrams):
                arr.append((n + k, k, latching_counit(X, z, LX[k])))
                to_E = Transformation(lows[k], E, {t: leg_maps[k][t] for t in lows[k].chains()})
                arr.append((n + k, 2 * n, laxlatch_map(to_E, z, LX[k], LE)))
            col = B.colimit(objs, arr)
            values[z] = col.obj
            into = col.legs[2 * n]
            for k in range(n):
                leg_maps[k][z] = col.legs[k]
            for i in range(d - 1):
                w = generator_map(z, i)
                actions[(z, i)] = B.compose(into, LE.leg(LatchObject((w.target,), w)))
            for s, r in binary_cuts(z):
                laxlatch_leg = LE.leg(LatchObject((s, r), identity_map(z)))
                laxity[(s, r)] = B.compose(into, laxlatch_leg)
    out = LaxDiagram(X0.labels, N, values, actions, B, laxity)
    legs = [Transformation(X, out, leg_maps[k]) for k, X in enumerate(diagrams)]
    return LaxColimit(out, legs)


def colimit_mediators(res: LaxColimit, diagrams: Sequence[LaxDiagram], arrows: Sequence[tuple],
                      K: LaxDiagram, max_cocones: int | None = None) -> Report:
    """Every cocone into ``K`` factors through the colimit by exactly one map."""
    rep = Report()
    B = K.base
    n = len(diagrams)
    homs = [list(enumerate_morphisms(X, K)) for X in diagrams]
    seen = 0

    def rec(k, chosen):
        nonlocal seen
        if rep or (max_cocones is not None and seen >= max_cocones):
            return
        if k == n:
            seen += 1
            rep.checked = seen
            cons = [(res.legs[i], Transformation(diagrams[i], K, chosen[i])) for i in range(n)]
            cnt = sum(1 for _ in enumerate_morphisms(res.diagram, K, constraints=cons))
            if cnt != 1:
                rep.add("mediator-count", cnt)
            return
        for h in homs[k]:
            ok = all(B.compose(chosen[j][t] if j < k else h[t], s[t]) == (chosen[i][t] if i < k else h[t])
                     for i, j, s in arrows if max(i, j) == k and min(i, j) <= k
                     for t in diagrams[0].chains())
            if ok:
                rec(k + 1, chosen + [h])

    rec(0, [])
    return rep


# ---------------------------------------------------------------------------
# comparisons recorded as data


def free_latching_comparison(G: LaxDiagram) -> dict:
    """Per chain of degree >= 2: latching size, value, and whether the
    latching counit ``laxlatch(G, z) -> G(z)`` is a bijection."""
    out = {}
    for z in G.chains():
        if degree(z) < 2:
            continue
        latch = laxlatch(truncate(G, degree(z) - 1), z)
        eps = latching_counit(G, z, latch)
        out[chain_key(z)] = {"latch": latch.obj, "value": G.values[z], "iso": G.base.is_iso(eps)}
    return out


def iterated_skeleton(G: LaxDiagram, top: int) -> LaxDiagram:
    """``sk_{top-1} ... sk_m G``: extend by latching objects up to degree ``top``."""
    while G.max_degree < top:
        G = skeleton(G)
    return G


def skeleton_reproduces(G: LaxDiagram) -> dict:
    """Compare the iterated skeleton of ``tau_1 G`` with ``G``: sizes and an
    isomorphism found by exhaustive search."""
    from .laxdiag import find_isomorphism
    S = iterated_skeleton(truncate(G, 1), G.max_degree)
    same_sizes = S.values == G.values
    iso = same_sizes and find_isomorphism(S, G) is not None
    return {"skeleton": {chain_key(t): n for t, n in S.values.items()},
            "diagram": {chain_key(t): n for t, n in G.values.items()},
            "isomorphic": iso}

"""Chains over a set of labels and the maps between them.

A chain ``(E0, ..., En)`` is a 1-cell from ``E0`` to ``En`` of degree ``n``.
A chain map ``t -> s`` is a monotone surjection from the edges of ``t`` onto
the edges of ``s``; ``s`` keeps the labels of ``t`` at block boundaries.
Horizontal composition is concatenation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Hashable, Iterable, Sequence

from .errors import InputError
from .fincat import (FinCategory, Surjection, compose_values, identity_surjection,
                     normalize_presentation, sigma_generator, upsilon_hom)

Chain = tuple


# ---------------------------------------------------------------------------
# chains


def make_chain(labels: Iterable[Hashable]) -> Chain:
    t = tuple(labels)
    if len(t) < 2:
        raise InputError("a chain needs at least two labels (degree >= 1)")
    return t


def degree(t: Chain) -> int:
    return len(t) - 1


def endpoints(t: Chain) -> tuple:
    return t[0], t[-1]


def chain_key(t: Chain) -> str:
    return ".".join(str(x) for x in t)


def parse_chain(key: str) -> Chain:
    if not isinstance(key, str) or not key:
        raise InputError(f"bad chain key {key!r}")
    return make_chain(key.split("."))


def concat(s: Chain, t: Chain) -> Chain:
    if s[-1] != t[0]:
        raise InputError(f"cannot concatenate {chain_key(s)} and {chain_key(t)}")
    return s + t[1:]


def concat_all(blocks: Sequence[Chain]) -> Chain:
    out = blocks[0]
    for b in blocks[1:]:
        out = concat(out, b)
    return out


def chains_between(labels: Sequence, a, b, max_degree: int) -> list[Chain]:
    """Chains from ``a`` to ``b`` of degree ``1..max_degree``, by degree then label order."""
    out = []
    for d in range(1, max_degree + 1):
        for inner in itertools.product(labels, repeat=d - 1):
            out.append((a,) + inner + (b,))
    return out


def all_chains(labels: Sequence, max_degree: int) -> list[Chain]:
    """Every chain of degree ``1..max_degree``, sorted by degree (stable)."""
    out = []
    for d in range(1, max_degree + 1):
        for t in itertools.product(labels, repeat=d + 1):
            out.append(t)
    return out


# ---------------------------------------------------------------------------
# chain maps


def _target_by_blocks(t: Chain, f: Surjection) -> Chain:
    labels = [t[0]]
    for j in range(f.n):
        labels.append(t[f.fiber(j)[-1] + 1])
    return tuple(labels)


def _target_by_deletion(t: Chain, f: Surjection) -> Chain:
    """Delete every vertex sitting between two edges of the same fiber."""
    drop = {k + 1 for k in range(f.m - 1) if f.values[k] == f.values[k + 1]}
    return tuple(x for i, x in enumerate(t) if i not in drop)


@dataclass(frozen=True)
class ChainMap:
    source: Chain
    surjection: Surjection

    def __post_init__(self):
        if self.surjection.m != degree(self.source):
            raise InputError("surjection domain must equal the source degree")

    @property
    def target(self) -> Chain:
        return _target_by_blocks(self.source, self.surjection)

    def is_identity(self) -> bool:
        return self.surjection.is_identity()

    def __repr__(self) -> str:
        return f"ChainMap({chain_key(self.source)} -> {chain_key(self.target)})"


def identity_map(t: Chain) -> ChainMap:
    return ChainMap(t, identity_surjection(degree(t)))


def generator_map(t: Chain, i: int) -> ChainMap:
    """The chain map collapsing edges ``i`` and ``i+1`` of ``t``."""
    return ChainMap(t, sigma_generator(degree(t) - 1, i))


def compose_maps(v: ChainMap, u: ChainMap) -> ChainMap:
    """``v o u`` for ``u: t -> s`` and ``v: s -> r``."""
    if u.target != v.source:
        raise InputError("chain maps are not composable")
    return ChainMap(u.source, compose_values(v.surjection, u.surjection))


def tensor_maps(maps: Sequence[ChainMap]) -> ChainMap:
    """Horizontal composite ``u0 (x) u1 (x) ...`` of chain maps."""
    vals, off_tgt = [], 0
    for u in maps:
        vals.extend(v + off_tgt for v in u.surjection.values)
        off_tgt += u.surjection.n
    src = concat_all([u.source for u in maps])
    return ChainMap(src, Surjection(tuple(vals), off_tgt))


@lru_cache(maxsize=None)
def chain_maps_from(t: Chain) -> tuple:
    """All chain maps out of ``t`` (including the identity), coarsest first."""
    d = degree(t)
    return tuple(ChainMap(t, f) for n in range(1, d + 1) for f in upsilon_hom(d, n))


def chain_maps_between(t: Chain, s: Chain) -> list[ChainMap]:
    return [u for u in chain_maps_from(t) if u.target == s]


def canonical_map_u_t(t: Chain) -> ChainMap:
    """The unique map from ``t`` to its endpoint chain."""
    return ChainMap(t, Surjection((0,) * degree(t), 1))


@lru_cache(maxsize=None)
def presentation_steps(u: ChainMap) -> tuple:
    """``u`` as a sequence of generator steps ``(chain, index)``, first step first.

    With the normal form ``sigma_{j1} o ... o sigma_{jk}`` the first step is
    ``sigma_{jk}`` at the source.
    """
    steps, cur = [], u.source
    for j in reversed(normalize_presentation(u.surjection).indices):
        steps.append((cur, j))
        cur = generator_map(cur, j).target
    return tuple(steps)


# ---------------------------------------------------------------------------
# decompositions

Decomposition = tuple


@lru_cache(maxsize=None)
def dec_enumerate(t: Chain) -> tuple:
    """All cuts of ``t`` at inner vertices; the trivial decomposition first."""
    d = degree(t)
    out = []
    for k in range(d):
        for cuts in itertools.combinations(range(1, d), k):
            out.append(split_at(t, cuts))
    return tuple(out)


def split_at(t: Chain, cuts: Sequence[int]) -> Decomposition:
    bounds = [0, *cuts, degree(t)]
    return tuple(t[a:b + 1] for a, b in zip(bounds, bounds[1:]))


def cut_positions(d: Decomposition) -> tuple:
    pos, out = 0, []
    for b in d[:-1]:
        pos += degree(b)
        out.append(pos)
    return tuple(out)


def binary_cuts(t: Chain) -> list[tuple[Chain, Chain]]:
    return [(t[:k + 1], t[k:]) for k in range(1, degree(t))]


def ternary_cuts(t: Chain) -> list[tuple[Chain, Chain, Chain]]:
    d = degree(t)
    return [(t[:a + 1], t[a:b + 1], t[b:]) for a in range(1, d) for b in range(a + 1, d)]


def dec_of_map(u: ChainMap, d: Decomposition) -> tuple[Decomposition, tuple]:
    """Source decomposition induced by a decomposition of the target, with block maps."""
    if concat_all(d) != u.target:
        raise InputError("decomposition does not decompose the target of the map")
    f = u.surjection
    src_cuts, block_maps, lo = [], [], 0
    tgt_lo = 0
    for k, block in enumerate(d):
        tgt_hi = tgt_lo + degree(block)
        hi = lo
        while hi < f.m and f.values[hi] < tgt_hi:
            hi += 1
        vals = tuple(v - tgt_lo for v in f.values[lo:hi])
        block_maps.append(ChainMap(u.source[lo:hi + 1], Surjection(vals, degree(block))))
        if k < len(d) - 1:
            src_cuts.append(hi)
        lo, tgt_lo = hi, tgt_hi
    return split_at(u.source, src_cuts), tuple(block_maps)


def respects_cuts(v: ChainMap, d: Decomposition) -> bool:
    """True when ``v`` never collapses two edges on opposite sides of a cut of ``d``."""
    vals = v.surjection.values
    return all(vals[c - 1] != vals[c] for c in cut_positions(d))


def split_map(v: ChainMap, d: Decomposition) -> tuple:
    """Write ``v`` as ``v0 (x) v1 (x) ...`` along the source decomposition ``d``."""
    out, lo = [], 0
    vals = v.surjection.values
    for block in d:
        hi = lo + degree(block)
        base = vals[lo]
        part = tuple(x - base for x in vals[lo:hi])
        out.append(ChainMap(block, Surjection(part, part[-1] + 1)))
        lo = hi
    return tuple(out)


# ---------------------------------------------------------------------------
# Grothendieck construction


def grothendieck_category(labels: Sequence, a, b, max_degree: int) -> FinCategory:
    """Objects ``(n, (s1..sn))``: composable chains from ``a`` to ``b`` of total
    degree at most ``max_degree``.  A morphism ``(f, u): (n, x) -> (m, y)`` pairs
    ``f: n -> m`` with chain maps ``u_k: y_k -> concat`` of the ``k``-th
    ``f``-block of ``x``.  Morphism ids are ``(f.values, u, x)``."""
    labels = tuple(labels)
    objects = []
    for t in chains_between(labels, a, b, max_degree):
        for d in dec_enumerate(t):
            objects.append((len(d), d))
    objs = set(objects)
    morphisms = {}
    for obj in objects:
        n, tup = obj
        for m in range(1, n + 1):
            for f in upsilon_hom(n, m):
                grouped = _group(tup, f)
                options = [maps_into(c, labels, max_degree) for c in grouped]
                for choice in itertools.product(*options):
                    tgt = (m, tuple(u.source for u in choice))
                    if tgt in objs:
                        morphisms[(f.values, tuple(choice), tup)] = (obj, tgt)
    compose = {}
    by_src: dict = {}
    for mid, (s, t) in morphisms.items():
        by_src.setdefault(s, []).append(mid)
    for f_id, (s, t) in morphisms.items():
        for g_id in by_src.get(t, []):
            compose[(g_id, f_id)] = grothendieck_compose(g_id, f_id)
    identities = {(n, tup): (tuple(range(n)), tuple(identity_map(s) for s in tup), tup)
                  for n, tup in objects}
    return FinCategory(objects, morphisms, compose, identities)


@lru_cache(maxsize=None)
def maps_into(target: Chain, labels: tuple, max_degree: int) -> tuple:
    """Chain maps ending at ``target`` whose source has degree at most ``max_degree``."""
    a, b = endpoints(target)
    out = []
    for s in chains_between(labels, a, b, max_degree):
        if degree(s) >= degree(target):
            out.extend(chain_maps_between(s, target))
    return tuple(out)


def _group(tup: tuple, f: Surjection) -> tuple:
    return tuple(concat_all([tup[i] for i in f.fiber(j)]) for j in range(f.n))


def grothendieck_compose(g_id, f_id):
    """``(g, v) o (f, u) = (g o f, v o cbar(g) u)``, read componentwise in chains."""
    fvals, us, src_tup = f_id
    gvals, vs, _ = g_id
    f = Surjection(fvals, max(fvals) + 1)
    g = Surjection(gvals, max(gvals) + 1)
    out = []
    for l, v in enumerate(vs):
        block = [us[k] for k in g.fiber(l)]
        out.append(compose_maps(tensor_maps(block), v))
    return (compose_values(g, f).values, tuple(out), src_tup)


# ---------------------------------------------------------------------------
# latching categories


@dataclass(frozen=True)
class LatchObject:
    """A composable tuple ``blocks`` with a map ``u: z -> concat(blocks)``."""

    blocks: tuple
    u: ChainMap


@dataclass(frozen=True)
class LatchMorphism:
    """``(g, v)``: ``g`` groups the source blocks, ``v_k: target.blocks[k] ->
    concat(k-th group of source blocks)``."""

    src: int
    tgt: int
    grouping: Surjection
    v: tuple


@dataclass
class LatchingCategory:
    z: Chain
    objects: list
    morphisms: list

    def index(self, obj: LatchObject) -> int:
        return self._index[obj]

    def __post_init__(self):
        self._index = {o: i for i, o in enumerate(self.objects)}

    def compose(self, m2: LatchMorphism, m1: LatchMorphism) -> LatchMorphism:
        """``m2 o m1`` for ``m1: a -> a'`` and ``m2: a' -> a''``."""
        if m1.tgt != m2.src:
            raise InputError("latching morphisms are not composable")
        g = compose_values(m2.grouping, m1.grouping)
        vs = []
        for l, v2 in enumerate(m2.v):
            parts = [m1.v[k] for k in m2.grouping.fiber(l)]
            vs.append(compose_maps(tensor_maps(parts), v2))
        return LatchMorphism(m1.src, m2.tgt, g, tuple(vs))

    def is_identity(self, m: LatchMorphism) -> bool:
        return m.src == m.tgt and m.grouping.is_identity() and all(v.is_identity() for v in m.v)


def _grouping_of(refinement: Sequence[int]) -> Surjection:
    vals = []
    for k, count in enumerate(refinement):
        vals.extend([k] * count)
    return Surjection(tuple(vals), len(refinement))


@lru_cache(maxsize=None)
def latching_category(z: Chain) -> LatchingCategory:
    """Objects ``(a, u)`` with ``u: z -> concat(a)`` and every block of degree
    below ``deg z``; morphisms are the comma morphisms between them."""
    if degree(z) < 2:
        return LatchingCategory(z, [], [])
    objects = []
    for u in chain_maps_from(z):
        for d in dec_enumerate(u.target):
            if u.is_identity() and len(d) == 1:
                continue
            objects.append(LatchObject(d, u))
    index = {o: i for i, o in enumerate(objects)}
    morphisms = []
    for j, tgt in enumerate(objects):
        cprime = concat_all(tgt.blocks)
        for parts in itertools.product(*[chain_maps_from(s) for s in tgt.blocks]):
            v = tensor_maps(parts)
            if v.source != cprime:
                raise AssertionError("tensor of block maps has the wrong source")
            u = compose_maps(v, tgt.u)
            images = [p.target for p in parts]
            for refine in itertools.product(*[dec_enumerate(c) for c in images]):
                blocks = tuple(b for r in refine for b in r)
                src = LatchObject(blocks, u)
                i = index.get(src)
                if i is None:
                    continue
                morphisms.append(LatchMorphism(i, j, _grouping_of([len(r) for r in refine]), parts))
    return LatchingCategory(z, objects, morphisms)


def classical_latching(z: Chain) -> tuple[list, list]:
    """Objects: non-identity maps ``u: z -> c``; morphisms ``w: c -> c'`` with
    ``w o u = u'``, as index triples ``(i, j, w)``."""
    objs = [u for u in chain_maps_from(z) if not u.is_identity()]
    index = {u: i for i, u in enumerate(objs)}
    mors = []
    for i, u in enumerate(objs):
        for w in chain_maps_from(u.target):
            mors.append((i, index[compose_maps(w, u)], w))
    return objs, mors

"""Finite categories and the combinatorics of monotone surjections.

Monotone surjections between finite ordinals form the category of
degeneracies; every such map is a composite of the elementary collapses
``sigma(n, i): n+1 -> n`` and admits a unique normal form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Hashable, Iterable, Iterator

from .errors import InputError
from .report import Report


# ---------------------------------------------------------------------------
# finite categories


@dataclass
class FinCategory:
    """A finite category given by explicit tables.

    ``morphisms`` maps a morphism id to ``(source, target)``; ``compose``
    maps ``(g, f)`` to ``g o f``; ``identities`` maps objects to ids.
    """

    objects: list
    morphisms: dict
    compose: dict
    identities: dict

    def src(self, f):
        return self.morphisms[f][0]

    def tgt(self, f):
        return self.morphisms[f][1]

    def comp(self, g, f):
        return self.compose[(g, f)]

    def hom(self, a, b) -> list:
        return [f for f, (s, t) in self.morphisms.items() if s == a and t == b]

    def is_identity(self, f) -> bool:
        return self.identities.get(self.src(f)) == f

    def to_json(self) -> dict:
        return {
            "objects": [str(o) for o in self.objects],
            "morphisms": [{"id": str(f), "src": str(s), "tgt": str(t)}
                          for f, (s, t) in self.morphisms.items()],
            "compose": [[str(g), str(f), str(gf)] for (g, f), gf in self.compose.items()],
            "identities": {str(o): str(i) for o, i in self.identities.items()},
        }

    @classmethod
    def from_json(cls, data: dict) -> "FinCategory":
        try:
            objects = list(data["objects"])
            morphisms = {m["id"]: (m["src"], m["tgt"]) for m in data["morphisms"]}
            compose = {(g, f): gf for g, f, gf in data["compose"]}
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed category: {exc}") from exc
        identities = dict(data.get("identities", {}))
        if not identities:
            # infer identities: the endomorphism acting neutrally on every composable pair
            for o in objects:
                for f, (s, t) in morphisms.items():
                    if s != o or t != o:
                        continue
                    neutral = all(
                        compose.get((f, g)) == g for g, (_, gt) in morphisms.items() if gt == o
                    ) and all(compose.get((g, f)) == g for g, (gs, _) in morphisms.items() if gs == o)
                    if neutral:
                        identities[o] = f
                        break
        return cls(objects, morphisms, compose, identities)


def validate_category(c: FinCategory) -> Report:
    """Check identities, totality on composable pairs, unit and associativity laws."""
    rep = Report()
    objs = set(c.objects)
    for f, (s, t) in c.morphisms.items():
        if s not in objs or t not in objs:
            rep.add("dangling", f, detail="source or target is not an object")
    for o in c.objects:
        i = c.identities.get(o)
        if i is None or c.morphisms.get(i) != (o, o):
            rep.add("identity", o, detail="missing or ill-typed identity")
    for (g, f), gf in c.compose.items():
        if f not in c.morphisms or g not in c.morphisms:
            rep.add("compose-unknown", g, f)
            continue
        if c.tgt(f) != c.src(g):
            rep.add("compose-not-composable", g, f)
            continue
        if c.morphisms.get(gf) != (c.src(f), c.tgt(g)):
            rep.add("compose-ill-typed", g, f, gf)
    for f, (s, t) in c.morphisms.items():
        for g, (s2, t2) in c.morphisms.items():
            if s2 == t and (g, f) not in c.compose:
                rep.add("compose-partial", g, f)
    if rep:
        return rep
    for f, (s, t) in c.morphisms.items():
        if c.comp(c.identities[t], f) != f or c.comp(f, c.identities[s]) != f:
            rep.add("unit-law", f)
    for f, (a, b) in c.morphisms.items():
        for g in [g for g, (s2, _) in c.morphisms.items() if s2 == b]:
            gf = c.comp(g, f)
            for h in [h for h, (s3, _) in c.morphisms.items() if s3 == c.tgt(g)]:
                if c.comp(h, gf) != c.comp(c.comp(h, g), f):
                    rep.add("associativity", f, g, h)
    return rep


def build_coarse_category(labels: Iterable[Hashable]) -> FinCategory:
    """The category with exactly one morphism between every ordered pair."""
    objs = list(dict.fromkeys(labels))
    if not objs:
        raise InputError("coarse category needs at least one label")
    morphisms = {(a, b): (a, b) for a in objs for b in objs}
    compose = {((b, c), (a, b)): (a, c) for a in objs for b in objs for c in objs}
    identities = {a: (a, a) for a in objs}
    return FinCategory(objs, morphisms, compose, identities)


@dataclass
class FinFunctor:
    source: FinCategory
    target: FinCategory
    object_map: dict
    morphism_map: dict

    def __call__(self, f):
        return self.morphism_map[f]


def validate_functor(fn: FinFunctor) -> Report:
    rep = Report()
    S, T = fn.source, fn.target
    for f, (s, t) in S.morphisms.items():
        img = fn.morphism_map.get(f)
        if img is None or T.morphisms.get(img) != (fn.object_map[s], fn.object_map[t]):
            rep.add("functor-typing", f)
    if rep:
        return rep
    for o in S.objects:
        if fn(S.identities[o]) != T.identities[fn.object_map[o]]:
            rep.add("functor-identity", o)
    for (g, f), gf in S.compose.items():
        if fn(gf) != T.comp(fn(g), fn(f)):
            rep.add("functor-composition", g, f)
    return rep


# ---------------------------------------------------------------------------
# monotone surjections


@dataclass(frozen=True)
class Surjection:
    """A monotone surjection ``{0..m-1} -> {0..n-1}`` stored by its values."""

    values: tuple
    n: int

    def __post_init__(self):
        v = self.values
        if not v or self.n < 1:
            raise InputError("surjections have nonempty domain and codomain")
        if v[0] != 0 or v[-1] != self.n - 1:
            raise InputError(f"not surjective/endpoint preserving: {v} -> {self.n}")
        for a, b in zip(v, v[1:]):
            if b < a or b > a + 1:
                raise InputError(f"not a monotone surjection: {v}")

    @property
    def m(self) -> int:
        return len(self.values)

    def __call__(self, k: int) -> int:
        return self.values[k]

    def is_identity(self) -> bool:
        return self.m == self.n

    def fiber(self, j: int) -> range:
        lo = self.values.index(j)
        hi = lo
        while hi < self.m and self.values[hi] == j:
            hi += 1
        return range(lo, hi)

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "values": list(self.values)}

    @classmethod
    def from_json(cls, data: dict) -> "Surjection":
        try:
            s = cls(tuple(int(x) for x in data["values"]), int(data["n"]))
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed surjection: {exc}") from exc
        if "m" in data and int(data["m"]) != s.m:
            raise InputError("surjection: m does not match the number of values")
        return s


def identity_surjection(n: int) -> Surjection:
    return Surjection(tuple(range(n)), n)


def sigma_generator(n: int, i: int) -> Surjection:
    """The collapse ``n+1 -> n`` identifying ``i`` and ``i+1``."""
    if n < 1 or not 0 <= i <= n - 1:
        raise InputError(f"sigma^{n}_{i} out of range")
    return Surjection(tuple(k if k <= i else k - 1 for k in range(n + 1)), n)


@lru_cache(maxsize=None)
def _upsilon_cached(m: int, n: int) -> tuple:
    out = []
    for cuts in itertools.combinations(range(m - 1), m - n):
        # ``cuts`` are the positions k with f(k) == f(k+1)
        vals, cur = [0], 0
        for k in range(m - 1):
            if k not in cuts:
                cur += 1
            vals.append(cur)
        out.append(Surjection(tuple(vals), n))
    return tuple(out)


def upsilon_hom(m: int, n: int) -> list[Surjection]:
    """All monotone surjections ``m -> n`` (empty when ``m < n``)."""
    if m < 1 or n < 1:
        raise InputError("sizes must be positive")
    if m < n:
        return []
    return list(_upsilon_cached(m, n))


def compose_values(g: Surjection, f: Surjection) -> Surjection:
    if f.n != g.m:
        raise InputError(f"cannot compose: codomain {f.n} != domain {g.m}")
    return Surjection(tuple(g.values[x] for x in f.values), g.n)


@dataclass(frozen=True)
class SigmaPresentation:
    """``f = sigma_{j1} o sigma_{j2} o ... o sigma_{jk}`` with ``j1 < ... < jk``.

    The rightmost generator is applied first.
    """

    m: int
    n: int
    indices: tuple = field(default=())

    def generators(self) -> list[Surjection]:
        # generator number r (0-based from the left) has codomain n + r
        return [sigma_generator(self.n + r, j) for r, j in enumerate(self.indices)]

    def compose(self) -> Surjection:
        out = identity_surjection(self.m)
        for gen in reversed(self.generators()):
            out = compose_values(gen, out)
        return out

    def is_admissible(self) -> bool:
        idx = self.indices
        return (len(idx) == self.m - self.n
                and all(a < b for a, b in zip(idx, idx[1:]))
                and all(0 <= j < self.n + r for r, j in enumerate(idx)))


def normalize_presentation(f: Surjection) -> SigmaPresentation:
    """The unique increasing index string presenting ``f``."""
    idx = tuple(k for k in range(f.m - 1) if f.values[k] == f.values[k + 1])
    return SigmaPresentation(f.m, f.n, idx)


def _prepend_generator(l: int, indices: tuple) -> tuple:
    """Normal form of ``sigma_l o (sigma_{j1} o ... )`` by the simplicial rewriting.

    If ``l >= j1`` the identity ``sigma_l sigma_{j1} = sigma_{j1} sigma_{l+1}``
    pushes the new generator inwards; otherwise it is already in place.
    """
    if not indices or l < indices[0]:
        return (l,) + tuple(indices)
    return (indices[0],) + _prepend_generator(l + 1, indices[1:])


def rewrite_presentation(g: SigmaPresentation, f: SigmaPresentation) -> SigmaPresentation:
    """Presentation of ``g o f`` computed purely by rewriting index strings."""
    if f.n != g.m:
        raise InputError("presentations are not composable")
    idx = f.indices
    for l in reversed(g.indices):
        idx = _prepend_generator(l, idx)
    return SigmaPresentation(f.m, g.n, idx)


def compose_surjections(g: Surjection, f: Surjection) -> Surjection:
    """``g o f``; the rewriting procedure is run alongside and must agree."""
    out = compose_values(g, f)
    rewritten = rewrite_presentation(normalize_presentation(g), normalize_presentation(f))
    if rewritten != normalize_presentation(out):  # pragma: no cover - would be a bug
        raise AssertionError(f"rewriting disagrees on {g} o {f}")
    return out


def iter_admissible(m: int, n: int) -> Iterator[SigmaPresentation]:
    for idx in itertools.combinations(range(m - 1), m - n):
        p = SigmaPresentation(m, n, idx)
        if p.is_admissible():
            yield p

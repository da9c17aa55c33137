"""Finite symmetric monoidal base with computable colimits.

The shipped instance is finite sets ``{0..n-1}`` under cartesian product.
Pairs are encoded row-major, ``(x, y) -> x * |B| + y``, so iterated tensors
are strictly associative and the unit ``1`` is strict on both sides.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import InputError
from .report import Report


@dataclass(frozen=True)
class FinMap:
    """A function ``{0..src-1} -> {0..tgt-1}``."""

    src: int
    tgt: int
    map: tuple

    def __post_init__(self):
        if len(self.map) != self.src or any(not 0 <= y < self.tgt for y in self.map):
            raise InputError(f"ill-formed map {self.src}->{self.tgt}: {self.map}")

    def __call__(self, x: int) -> int:
        return self.map[x]

    def to_json(self) -> dict:
        return {"src": self.src, "tgt": self.tgt, "map": list(self.map)}

    @classmethod
    def from_json(cls, data) -> "FinMap":
        try:
            return cls(int(data["src"]), int(data["tgt"]), tuple(int(v) for v in data["map"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed finite-set map: {exc}") from exc


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra < rb:
            ra, rb = rb, ra
        self.parent[ra] = rb
        return True


@dataclass
class Colimit:
    """A colimit object with its structure maps, one per diagram object."""

    obj: int
    legs: list
    representatives: list = field(default_factory=list, repr=False)

    def mediate(self, maps: Sequence[FinMap]) -> FinMap:
        """The unique map out of the colimit restricting to ``maps``."""
        if len(maps) != len(self.legs):
            raise InputError("cocone has the wrong number of legs")
        if not maps:
            raise InputError("cannot infer the target of an empty cocone")
        tgt = maps[0].tgt
        out = [None] * self.obj
        for i, leg in enumerate(self.legs):
            f = maps[i]
            if f.tgt != tgt or f.src != leg.src:
                raise InputError("cocone legs are ill-typed")
            for x in range(leg.src):
                c = leg(x)
                if out[c] is None:
                    out[c] = f(x)
                elif out[c] != f(x):
                    raise InputError("cocone does not commute with the diagram")
        return FinMap(self.obj, tgt, tuple(out))

    def mediate_to(self, tgt: int, maps: Sequence[FinMap]) -> FinMap:
        if self.obj and not maps:
            raise InputError("empty cocone on a nonempty colimit")
        if not self.legs:
            return FinMap(0, tgt, ())
        return self.mediate(maps)


@dataclass(frozen=True)
class FiniteDiagram:
    """Objects plus arrows ``(i, j, f)`` with ``f: objects[i] -> objects[j]``."""

    objects: tuple
    arrows: tuple


@dataclass(frozen=True)
class ConeDiagram:
    apex: int
    legs: tuple


class FinSetBase:
    """Finite sets with cartesian product."""

    name = "finset"
    unit = 1
    initial = 0

    # --- category structure
    def identity(self, a: int) -> FinMap:
        return FinMap(a, a, tuple(range(a)))

    def compose(self, g: FinMap, f: FinMap) -> FinMap:
        if f.tgt != g.src:
            raise InputError(f"cannot compose {g.src}->{g.tgt} after {f.src}->{f.tgt}")
        gm = g.map
        return FinMap(f.src, g.tgt, tuple(gm[y] for y in f.map))

    def compose_all(self, *maps: FinMap) -> FinMap:
        """``compose_all(h, g, f) = h o g o f``."""
        out = maps[-1]
        for g in reversed(maps[:-1]):
            out = self.compose(g, out)
        return out

    def eq(self, f: FinMap, g: FinMap) -> bool:
        return f == g

    def empty_map(self, b: int) -> FinMap:
        return FinMap(0, b, ())

    def to_terminal(self, a: int) -> FinMap:
        return FinMap(a, 1, (0,) * a)

    # --- monoidal structure
    def tensor(self, a: int, b: int) -> int:
        return a * b

    def tensor_objs(self, objs: Sequence[int]) -> int:
        out = 1
        for a in objs:
            out *= a
        return out

    def tensor_map(self, f: FinMap, g: FinMap) -> FinMap:
        gs, gt = g.src, g.tgt
        return FinMap(f.src * gs, f.tgt * gt,
                      tuple(fx * gt + gy for fx in f.map for gy in g.map))

    def tensor_maps(self, maps: Sequence[FinMap]) -> FinMap:
        out = self.identity(1)
        for f in maps:
            out = self.tensor_map(out, f)
        return out

    def sym(self, a: int, b: int) -> FinMap:
        return FinMap(a * b, b * a, tuple(y * a + x for x in range(a) for y in range(b)))

    def middle_swap(self, a: int, b: int, c: int, d: int) -> FinMap:
        """``a b c d -> a c b d``, i.e. ``id (x) sym (x) id``."""
        return self.tensor_maps([self.identity(a), self.sym(b, c), self.identity(d)])

    def distributor(self, a: int, b: int, c: int) -> FinMap:
        """``a (x) (b + c) -> (a (x) b) + (a (x) c)``."""
        out = []
        for x in range(a):
            for y in range(b + c):
                out.append(x * b + y if y < b else a * b + x * c + (y - b))
        return FinMap(a * (b + c), a * b + a * c, tuple(out))

    # --- colimits
    def colimit(self, objects: Sequence[int], arrows: Sequence[tuple]) -> Colimit:
        """Colimit of a finite diagram by union-find; classes are numbered in
        order of first occurrence, which gives a canonical normal form."""
        offsets, total = [], 0
        for a in objects:
            offsets.append(total)
            total += a
        uf = UnionFind(total)
        for i, j, f in arrows:
            if f.src != objects[i] or f.tgt != objects[j]:
                raise InputError(f"arrow {i}->{j} does not match the diagram objects")
            oi, oj = offsets[i], offsets[j]
            for x, y in enumerate(f.map):
                uf.union(oi + x, oj + y)
        label, reps = {}, []
        for k in range(total):
            r = uf.find(k)
            if r not in label:
                label[r] = len(reps)
                reps.append(k)
        n = len(reps)
        legs = [FinMap(a, n, tuple(label[uf.find(offsets[i] + x)] for x in range(a)))
                for i, a in enumerate(objects)]
        where = []
        for k in reps:
            i = bisect.bisect_right(offsets, k) - 1
            while objects[i] == 0:
                i -= 1
            where.append((i, k - offsets[i]))
        return Colimit(n, legs, where)

    def coproduct(self, objs: Sequence[int]) -> Colimit:
        return self.colimit(list(objs), [])

    def pushout(self, f: FinMap, g: FinMap) -> Colimit:
        """Pushout of ``f.tgt <- f.src -> g.tgt``; legs are (apex, f side, g side)."""
        if f.src != g.src:
            raise InputError("pushout span has mismatched sources")
        return self.colimit([f.src, f.tgt, g.tgt], [(0, 1, f), (0, 2, g)])

    def coequalizer(self, f: FinMap, g: FinMap) -> Colimit:
        if (f.src, f.tgt) != (g.src, g.tgt):
            raise InputError("coequalizer needs a parallel pair")
        return self.colimit([f.src, f.tgt], [(0, 1, f), (0, 1, g)])

    def cone_colimit(self, cone: ConeDiagram) -> Colimit:
        """Colimit of a cone; legs are (apex, then one per leg target)."""
        objs = [cone.apex] + [f.tgt for f in cone.legs]
        for f in cone.legs:
            if f.src != cone.apex:
                raise InputError("cone legs must share the apex")
        return self.colimit(objs, [(0, k + 1, f) for k, f in enumerate(cone.legs)])

    def kernel_pair(self, q: FinMap) -> tuple[int, FinMap, FinMap]:
        pairs = [(x, y) for x in range(q.src) for y in range(q.src) if q(x) == q(y)]
        n = len(pairs)
        return n, FinMap(n, q.src, tuple(p[0] for p in pairs)), FinMap(n, q.src, tuple(p[1] for p in pairs))

    def factor_through_epi(self, q: FinMap, f: FinMap) -> FinMap | None:
        """The map ``g`` with ``g o q = f``, for surjective ``q``; None if it fails."""
        if q.src != f.src:
            raise InputError("factor_through_epi: sources differ")
        out = [None] * q.tgt
        for x in range(q.src):
            c = q(x)
            if out[c] is None:
                out[c] = f(x)
            elif out[c] != f(x):
                return None
        if any(v is None for v in out):
            return None
        return FinMap(q.tgt, f.tgt, tuple(out))

    # --- predicates and enumeration
    def is_injective(self, f: FinMap) -> bool:
        return len(set(f.map)) == f.src

    def is_surjective(self, f: FinMap) -> bool:
        return len(set(f.map)) == f.tgt

    def is_iso(self, f: FinMap) -> bool:
        return f.src == f.tgt and self.is_injective(f)

    def inverse(self, f: FinMap) -> FinMap:
        if not self.is_iso(f):
            raise InputError("map is not invertible")
        inv = [0] * f.src
        for x, y in enumerate(f.map):
            inv[y] = x
        return FinMap(f.tgt, f.src, tuple(inv))

    def hom(self, a: int, b: int) -> Iterator[FinMap]:
        for vals in itertools.product(range(b), repeat=a):
            yield FinMap(a, b, vals)

    def hom_size(self, a: int, b: int) -> int:
        return b ** a


@dataclass
class ModelData:
    """Decidable model-theoretic predicates on a base."""

    base: FinSetBase

    def is_weq(self, f: FinMap) -> bool:
        return self.base.is_iso(f)

    def is_cof(self, f: FinMap) -> bool:
        return True

    def is_fib(self, f: FinMap) -> bool:
        return True

    def is_trivial_fibration(self, f: FinMap) -> bool:
        return self.is_fib(f) and self.is_weq(f)

    def factor_cof_trivfib(self, f: FinMap) -> tuple[FinMap, FinMap]:
        """``(h, j)`` with ``j o h = f``, ``h`` a cofibration, ``j`` a trivial fibration."""
        return f, self.base.identity(f.tgt)

    def generating_cofibrations(self, max_size: int = 2) -> list[FinMap]:
        return [f for a in range(max_size + 1) for b in range(max_size + 1)
                for f in self.base.hom(a, b) if self.is_cof(f)]

    def has_rlp(self, p: FinMap, against: Sequence[FinMap] | None = None) -> bool:
        """Right lifting property of ``p`` against the given cofibrations,
        decided by enumerating every square and every candidate lift."""
        B = self.base
        gens = self.generating_cofibrations() if against is None else against
        for i in gens:
            for top in B.hom(i.src, p.src):
                for bottom in B.hom(i.tgt, p.tgt):
                    if B.compose(p, top) != B.compose(bottom, i):
                        continue
                    if not any(B.compose(l, i) == top and B.compose(p, l) == bottom
                               for l in B.hom(i.tgt, p.src)):
                        return False
        return True


def finset_instance() -> tuple[FinSetBase, ModelData]:
    base = FinSetBase()
    return base, ModelData(base)


# ---------------------------------------------------------------------------
# universal properties


def iterated_cone_colimit(base: FinSetBase, cone: ConeDiagram) -> Colimit:
    """Cone colimit as a chain of pushouts, adding one leg at a time."""
    if not cone.legs:
        return base.colimit([cone.apex], [])
    cur = base.identity(cone.apex)
    legs_to_cur: list[FinMap] = []
    for f in cone.legs:
        po = base.pushout(cur, f)
        legs_to_cur = [base.compose(po.legs[1], g) for g in legs_to_cur]
        legs_to_cur.append(po.legs[2])
        cur = po.legs[0]
    return Colimit(cur.tgt, [cur] + legs_to_cur)


def as_diagram(kind: str, diagram) -> FiniteDiagram:
    if kind == "coproduct":
        return FiniteDiagram(tuple(diagram), ())
    if kind == "pushout":
        f, g = diagram
        return FiniteDiagram((f.src, f.tgt, g.tgt), ((0, 1, f), (0, 2, g)))
    if kind == "coequalizer":
        f, g = diagram
        return FiniteDiagram((f.src, f.tgt), ((0, 1, f), (0, 1, g)))
    if kind == "cone":
        return FiniteDiagram((diagram.apex,) + tuple(f.tgt for f in diagram.legs),
                             tuple((0, k + 1, f) for k, f in enumerate(diagram.legs)))
    if kind == "diagram":
        return diagram
    raise InputError(f"unknown colimit kind {kind!r}")


def enumerate_cocones(base: FinSetBase, d: FiniteDiagram, apex: int) -> Iterator[list[FinMap]]:
    """All cocones from ``d`` to ``apex``, by backtracking over legs."""
    n = len(d.objects)
    incident = [[] for _ in range(n)]
    for i, j, f in d.arrows:
        incident[max(i, j)].append((i, j, f))
    chosen: list = [None] * n

    def rec(k):
        if k == n:
            yield list(chosen)
            return
        for leg in base.hom(d.objects[k], apex):
            chosen[k] = leg
            if all(base.compose(chosen[j], f) == chosen[i] for i, j, f in incident[k]):
                yield from rec(k + 1)
        chosen[k] = None

    yield from rec(0)


def verify_universal_property(kind: str, candidate: Colimit, diagram, base: FinSetBase | None = None,
                              max_apex: int | None = None) -> Report:
    """Exhaustively test the colimit property of ``candidate``.

    Every cocone to every test apex of size up to ``max_apex`` must factor
    through the candidate by exactly one mediating map.
    """
    base = base or FinSetBase()
    d = as_diagram(kind, diagram)
    if len(candidate.legs) != len(d.objects):
        raise InputError("candidate has the wrong number of legs")
    for i, j, f in d.arrows:
        if base.compose(candidate.legs[j], f) != candidate.legs[i]:
            raise InputError(f"candidate cocone does not commute on arrow {i}->{j}")
    rep = Report()
    top = max_apex if max_apex is not None else max(2, min(candidate.obj + 1, 3))
    for apex in range(top + 1):
        for cocone in enumerate_cocones(base, d, apex):
            mediators = [m for m in base.hom(candidate.obj, apex)
                         if all(base.compose(m, leg) == c for leg, c in zip(candidate.legs, cocone))]
            if not mediators:
                rep.add("no mediator", apex, tuple(c.map for c in cocone))
                return rep
            if len(mediators) > 1:
                rep.add("non-unique", apex, tuple(c.map for c in cocone))
                return rep
    return rep


def find_bijection(n: int, m: int, constraints: Sequence[tuple[FinMap, FinMap]],
                   count: bool = False):
    """Search bijections ``b: n -> m`` with ``b o lhs = rhs`` for every constraint.

    Constrained elements are propagated first; the rest is exhausted by
    backtracking.  Returns one bijection (or the number of them with ``count``).
    """
    if n != m:
        return 0 if count else None
    forced: dict[int, int] = {}
    for lhs, rhs in constraints:
        if lhs.src != rhs.src or lhs.tgt != n or rhs.tgt != m:
            raise InputError("ill-typed bijection constraint")
        for x in range(lhs.src):
            a, b = lhs(x), rhs(x)
            if forced.setdefault(a, b) != b:
                return 0 if count else None
    if len(set(forced.values())) != len(forced):
        return 0 if count else None
    free_src = [x for x in range(n) if x not in forced]
    free_tgt = [y for y in range(m) if y not in set(forced.values())]
    if count:
        total = 1
        for k in range(1, len(free_src) + 1):
            total *= k
        return total
    assignment = dict(forced)
    assignment.update(zip(free_src, free_tgt))
    return FinMap(n, m, tuple(assignment[x] for x in range(n)))


# ---------------------------------------------------------------------------
# 3-ary coherent systems


@dataclass(frozen=True)
class CoherentSystem3:
    m1: int
    m2: int
    m3: int
    m12: int
    m23: int
    m: int
    phi12: FinMap
    phi23: FinMap
    phi1_23: FinMap
    phi12_3: FinMap
    phi: FinMap

    def validate(self, base: FinSetBase) -> Report:
        rep = Report()
        T = base.tensor
        shapes = {
            "phi12": (self.phi12, T(self.m1, self.m2), self.m12),
            "phi23": (self.phi23, T(self.m2, self.m3), self.m23),
            "phi1_23": (self.phi1_23, T(self.m1, self.m23), self.m),
            "phi12_3": (self.phi12_3, T(self.m12, self.m3), self.m),
            "phi": (self.phi, T(T(self.m1, self.m2), self.m3), self.m),
        }
        for name, (f, s, t) in shapes.items():
            if (f.src, f.tgt) != (s, t):
                rep.add("shape", name)
        if rep:
            return rep
        left = base.compose(self.phi12_3, base.tensor_map(self.phi12, base.identity(self.m3)))
        right = base.compose(self.phi1_23, base.tensor_map(base.identity(self.m1), self.phi23))
        if left != self.phi or right != self.phi:
            rep.add("associativity", detail="the two triple composites differ from phi")
        return rep


@dataclass
class CoherentPushout:
    obj: int
    beta: FinMap
    system: CoherentSystem3
    staged_system: CoherentSystem3
    stage_betas: tuple
    iso: FinMap
    iso_r12: FinMap
    iso_r23: FinMap


def _coherent_step(base: FinSetBase, sys: CoherentSystem3, a1: FinMap, a2: FinMap, a3: FinMap):
    """Colimit of the defining semi-cube; returns the new system on the
    moved objects, the canonical map ``m -> m'`` and the maps
    ``m12 -> R12``, ``m23 -> R23``."""
    T, tm, I = base.tensor, base.tensor_map, base.identity
    r12 = base.pushout(sys.phi12, tm(a1, a2))
    r23 = base.pushout(sys.phi23, tm(a2, a3))
    alpha12, phi12t = r12.legs[1], r12.legs[2]
    alpha23, phi23t = r23.legs[1], r23.legs[2]
    m1p, m2p, m3p = a1.tgt, a2.tgt, a3.tgt
    objs = [
        T(T(sys.m1, sys.m2), sys.m3),   # 0
        T(sys.m12, sys.m3),             # 1
        T(sys.m1, sys.m23),             # 2
        sys.m,                          # 3
        T(T(m1p, m2p), m3p),            # 4
        T(r12.obj, m3p),                # 5
        T(m1p, r23.obj),                # 6
    ]
    arrows = [
        (0, 1, tm(sys.phi12, I(sys.m3))),
        (0, 2, tm(I(sys.m1), sys.phi23)),
        (1, 3, sys.phi12_3),
        (2, 3, sys.phi1_23),
        (0, 4, base.tensor_maps([a1, a2, a3])),
        (4, 5, tm(phi12t, I(m3p))),
        (4, 6, tm(I(m1p), phi23t)),
        (1, 5, tm(alpha12, a3)),
        (2, 6, tm(a1, alpha23)),
    ]
    col = base.colimit(objs, arrows)
    new = CoherentSystem3(m1p, m2p, m3p, r12.obj, r23.obj, col.obj,
                          phi12t, phi23t, col.legs[6], col.legs[5], col.legs[4])
    return new, col.legs[3], alpha12, alpha23


def coherent_pushout(sys: CoherentSystem3, a1: FinMap, a2: FinMap, a3: FinMap,
                     base: FinSetBase | None = None) -> CoherentPushout:
    """The coherent object of a 3-ary system along ``a1, a2, a3``.

    Computed directly and in three stages (moving one object at a time);
    the stages are matched to the direct construction by a bijection search.
    """
    base = base or FinSetBase()
    if (a1.src, a2.src, a3.src) != (sys.m1, sys.m2, sys.m3):
        raise InputError("moving maps do not start at the system's objects")
    if sys.validate(base):
        raise InputError("input is not a coherent system")
    I = base.identity
    direct, beta, al12, al23 = _coherent_step(base, sys, a1, a2, a3)
    s1, b1, c12, c23 = _coherent_step(base, sys, a1, I(sys.m2), I(sys.m3))
    s2, b2, d12, d23 = _coherent_step(base, s1, I(s1.m1), a2, I(s1.m3))
    s3, b3, e12, e23 = _coherent_step(base, s2, I(s2.m1), I(s2.m2), a3)
    st12 = base.compose_all(e12, d12, c12)
    st23 = base.compose_all(e23, d23, c23)
    beta_s = base.compose_all(b3, b2, b1)

    iso12 = find_bijection(direct.m12, s3.m12, [(al12, st12), (direct.phi12, s3.phi12)])
    iso23 = find_bijection(direct.m23, s3.m23, [(al23, st23), (direct.phi23, s3.phi23)])
    if iso12 is None or iso23 is None:
        raise AssertionError("staged laxity objects are not isomorphic to the direct ones")
    tm = base.tensor_map
    iso = find_bijection(direct.m, s3.m, [
        (beta, beta_s),
        (direct.phi, s3.phi),
        (direct.phi12_3, base.compose(s3.phi12_3, tm(iso12, I(direct.m3)))),
        (direct.phi1_23, base.compose(s3.phi1_23, tm(I(direct.m1), iso23))),
    ])
    if iso is None:
        raise AssertionError("staged coherent object is not isomorphic to the direct one")
    return CoherentPushout(direct.m, beta, direct, s3, (b1, b2, b3), iso, iso12, iso23)

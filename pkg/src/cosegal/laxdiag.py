"""Degree-truncated lax diagrams on chains (pre-Co-Segal categories).

A diagram assigns a base object ``F(t)`` to every chain ``t`` of degree at
most ``N``, a map ``F(u): F(s) -> F(t)`` to every chain map ``u: t -> s``
(stored on generators only) and laxity maps ``F(s) (x) F(t) -> F(s (x) t)``.
A family is the same without laxity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping, Sequence

from .base import FinMap, FinSetBase, ModelData
from .errors import InputError, PreconditionError
from .report import Report
from .sx import (Chain, ChainMap, all_chains, binary_cuts, canonical_map_u_t, chain_key,
                 chain_maps_from, concat, degree, generator_map, identity_map, parse_chain,
                 presentation_steps, tensor_maps, ternary_cuts)

_BASE = FinSetBase()


@dataclass(eq=False)
class Family:
    """Values and generator actions of a presheaf family, per chain."""

    labels: tuple
    max_degree: int
    values: dict
    actions: dict
    base: FinSetBase = field(default=_BASE, repr=False)

    def __post_init__(self):
        self.labels = tuple(self.labels)
        self._cache: dict = {}

    # --- access
    def chains(self) -> list[Chain]:
        return all_chains(self.labels, self.max_degree)

    def value(self, t: Chain) -> int:
        return self.values[t]

    def act_gen(self, t: Chain, i: int) -> FinMap:
        return self.actions[(t, i)]

    def act(self, u: ChainMap) -> FinMap:
        """``F(u): F(target) -> F(source)`` composed along the normal form of ``u``."""
        hit = self._cache.get(u)
        if hit is not None:
            return hit
        out = self.base.identity(self.values[u.source])
        for t, i in presentation_steps(u):
            out = self.base.compose(out, self.actions[(t, i)])
        self._cache[u] = out
        return out

    def generators(self) -> Iterator[tuple[Chain, int]]:
        for t in self.chains():
            for i in range(degree(t) - 1):
                yield t, i

    def sizes(self) -> dict:
        return dict(self.values)

    def is_lax(self) -> bool:
        return False

    # --- serialization
    def to_json(self) -> dict:
        return {
            "objects": [str(x) for x in self.labels],
            "max_degree": self.max_degree,
            "values": {chain_key(t): self.values[t] for t in self.chains()},
            "actions": {f"{chain_key(t)}/{i}": self.actions[(t, i)].to_json()
                        for t, i in self.generators()},
        }


@dataclass(eq=False)
class LaxDiagram(Family):
    laxity: dict = field(default_factory=dict)

    def is_lax(self) -> bool:
        return True

    def lax(self, s: Chain, t: Chain) -> FinMap:
        return self.laxity[(s, t)]

    def lax_many(self, blocks: Sequence[Chain]) -> FinMap:
        """Left-nested iterated laxity ``F(b0) (x) ... (x) F(bk) -> F(concat)``."""
        key = ("lax", tuple(blocks))
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        B = self.base
        if len(blocks) == 1:
            out = B.identity(self.values[blocks[0]])
        else:
            head = blocks[:-1]
            left = self.lax_many(head)
            c = head[0]
            for b in head[1:]:
                c = concat(c, b)
            out = B.compose(self.laxity[(c, blocks[-1])],
                            B.tensor_map(left, B.identity(self.values[blocks[-1]])))
        self._cache[key] = out
        return out

    def laxity_pairs(self) -> Iterator[tuple[Chain, Chain]]:
        for t in self.chains():
            for s, r in binary_cuts(t):
                yield s, r

    def to_json(self) -> dict:
        out = super().to_json()
        out["laxity"] = {f"{chain_key(s)}|{chain_key(t)}": self.laxity[(s, t)].to_json()
                         for s, t in self.laxity_pairs()}
        return out


@dataclass(eq=False)
class Transformation:
    """Per-chain components ``sigma_t: F(t) -> G(t)``."""

    source: Family
    target: Family
    components: dict

    def __getitem__(self, t: Chain) -> FinMap:
        return self.components[t]

    def compose_after(self, other: "Transformation") -> "Transformation":
        """``self o other``."""
        B = self.source.base
        return Transformation(other.source, self.target,
                              {t: B.compose(self.components[t], other.components[t])
                               for t in self.source.chains()})

    def is_levelwise(self, pred: Callable[[FinMap], bool]) -> bool:
        return all(pred(self.components[t]) for t in self.source.chains())


SimpleTransformation = Transformation


def identity_transformation(F: Family) -> Transformation:
    return Transformation(F, F, {t: F.base.identity(F.values[t]) for t in F.chains()})


# ---------------------------------------------------------------------------
# construction helpers


def family_from_functions(labels, max_degree: int, value: Callable[[Chain], int],
                          action: Callable[[Chain, int], FinMap], base: FinSetBase = _BASE,
                          laxity: Callable[[Chain, Chain], FinMap] | None = None) -> Family:
    values = {t: value(t) for t in all_chains(labels, max_degree)}
    actions = {(t, i): action(t, i) for t in values for i in range(degree(t) - 1)}
    if laxity is None:
        return Family(tuple(labels), max_degree, values, actions, base)
    lx = {(s, r): laxity(s, r) for t in values for s, r in binary_cuts(t)}
    return LaxDiagram(tuple(labels), max_degree, values, actions, base, lx)


def constant_diagram(labels, max_degree: int, size: int = 1) -> LaxDiagram:
    """Constant diagram; for ``size`` 1 this is the terminal diagram."""
    B = _BASE
    if size not in (0, 1):
        raise InputError("constant diagrams need a laxity; only sizes 0 and 1 are canonical")
    return family_from_functions(labels, max_degree, lambda t: size,
                                 lambda t, i: B.identity(size), B,
                                 laxity=lambda s, r: B.identity(size))


def unit_diagram(max_degree: int, label="*") -> LaxDiagram:
    """The constant lax diagram with value the unit object on one label."""
    return constant_diagram((label,), max_degree, 1)


def truncate_family(F: Family, m: int) -> Family:
    if not 1 <= m <= F.max_degree:
        raise InputError(f"cannot truncate degree {F.max_degree} to {m}")
    values = {t: v for t, v in F.values.items() if degree(t) <= m}
    actions = {k: v for k, v in F.actions.items() if degree(k[0]) <= m}
    if F.is_lax():
        lx = {k: v for k, v in F.laxity.items() if degree(k[0]) + degree(k[1]) <= m}
        return LaxDiagram(F.labels, m, values, actions, F.base, lx)
    return Family(F.labels, m, values, actions, F.base)


def underlying_family(F: Family) -> Family:
    return Family(F.labels, F.max_degree, dict(F.values), dict(F.actions), F.base)


# ---------------------------------------------------------------------------
# validation


def validate_family(F: Family) -> Report:
    """Shapes of the action maps and the simplicial relations between them."""
    B, rep = F.base, Report()
    for t in F.chains():
        if t not in F.values:
            rep.add("missing-value", chain_key(t))
    if rep:
        return rep
    for t, i in F.generators():
        a = F.actions.get((t, i))
        tgt = generator_map(t, i).target
        if a is None or (a.src, a.tgt) != (F.values[tgt], F.values[t]):
            rep.add("action-shape", chain_key(t), i)
    if rep:
        return rep
    for t in F.chains():
        m = degree(t)
        if m < 3:
            continue
        composites: dict = {}
        for i1 in range(m - 1):
            t1 = generator_map(t, i1).target
            for i2 in range(m - 2):
                g1, g2 = generator_map(t, i1), generator_map(t1, i2)
                key = tuple(g2.surjection.values[x] for x in g1.surjection.values)
                via = B.compose(F.actions[(t, i1)], F.actions[(t1, i2)])
                prev = composites.setdefault(key, (via, (i1, i2)))
                if prev[0] != via:
                    rep.add("functoriality", chain_key(t), prev[1], (i1, i2))
    return rep


def validate_diagram(F: LaxDiagram, exhaustive: bool = False) -> Report:
    """Functoriality, naturality of laxity, and associativity coherence.

    Naturality is checked on generators in each slot (which implies it for
    all maps once functoriality holds); ``exhaustive`` checks every pair of maps.
    """
    rep = validate_family(F)
    if rep:
        return rep
    B = F.base
    for s, t in F.laxity_pairs():
        phi = F.laxity.get((s, t))
        if phi is None or (phi.src, phi.tgt) != (F.values[s] * F.values[t], F.values[concat(s, t)]):
            rep.add("laxity-shape", chain_key(s), chain_key(t))
    if rep:
        return rep
    for s, t in F.laxity_pairs():
        if exhaustive:
            pairs = [(u, v) for u in chain_maps_from(s) for v in chain_maps_from(t)]
        else:
            pairs = [(generator_map(s, i), identity_map(t)) for i in range(degree(s) - 1)]
            pairs += [(identity_map(s), generator_map(t, i)) for i in range(degree(t) - 1)]
        for u, v in pairs:
            lhs = B.compose(F.laxity[(s, t)], B.tensor_map(F.act(u), F.act(v)))
            rhs = B.compose(F.act(tensor_maps([u, v])), F.laxity[(u.target, v.target)])
            if lhs != rhs:
                rep.add("laxity-naturality", repr(u), repr(v))
    for t in F.chains():
        for r, s, v in ternary_cuts(t):
            rs, sv = concat(r, s), concat(s, v)
            lhs = B.compose(F.laxity[(rs, v)], B.tensor_map(F.laxity[(r, s)], B.identity(F.values[v])))
            rhs = B.compose(F.laxity[(r, sv)], B.tensor_map(B.identity(F.values[r]), F.laxity[(s, v)]))
            if lhs != rhs:
                rep.add("associativity", chain_key(r), chain_key(s), chain_key(v))
    return rep


def validate_transformation(sigma: Transformation, laxity: bool = True) -> Report:
    """Naturality and, for lax diagrams, the laxity-compatibility square."""
    F, G, B = sigma.source, sigma.target, sigma.source.base
    rep = Report()
    if F.labels != G.labels or F.max_degree != G.max_degree:
        rep.add("mismatch", detail="source and target differ in labels or degree")
        return rep
    for t in F.chains():
        c = sigma.components.get(t)
        if c is None or (c.src, c.tgt) != (F.values[t], G.values[t]):
            rep.add("component-shape", chain_key(t))
    if rep:
        return rep
    for t, i in F.generators():
        tgt = generator_map(t, i).target
        lhs = B.compose(sigma[t], F.actions[(t, i)])
        rhs = B.compose(G.actions[(t, i)], sigma[tgt])
        if lhs != rhs:
            rep.add("naturality", chain_key(t), i)
    if laxity and F.is_lax() and G.is_lax():
        for s, t in F.laxity_pairs():
            lhs = B.compose(sigma[concat(s, t)], F.laxity[(s, t)])
            rhs = B.compose(G.laxity[(s, t)], B.tensor_map(sigma[s], sigma[t]))
            if lhs != rhs:
                rep.add("laxity-square", chain_key(s), chain_key(t))
    return rep


# ---------------------------------------------------------------------------
# Co-Segal predicate


@dataclass
class CosegalResult:
    holds: bool
    witnesses: list

    def __bool__(self) -> bool:
        return self.holds


def is_cosegal(F: Family, md: ModelData | None = None, all_maps: bool = False) -> CosegalResult:
    """Every ``F(u_t)`` is a weak equivalence (or, with ``all_maps``, every ``F(u)``)."""
    md = md or ModelData(F.base)
    bad = []
    for t in F.chains():
        if degree(t) < 2:
            continue
        maps = [canonical_map_u_t(t)] if not all_maps else [
            u for u in chain_maps_from(t) if not u.is_identity()]
        for u in maps:
            if not md.is_weq(F.act(u)):
                bad.append(chain_key(t) if not all_maps else (chain_key(t), chain_key(u.target)))
    return CosegalResult(not bad, bad)


# ---------------------------------------------------------------------------
# semi-categories


@dataclass
class SemiEnrichedCategory:
    labels: tuple
    hom: dict
    comp: dict
    base: FinSetBase = field(default=_BASE, repr=False)

    def validate(self) -> Report:
        B, rep = self.base, Report()
        L = self.labels
        for a, b, c in itertools.product(L, repeat=3):
            f = self.comp.get((a, b, c))
            if f is None or (f.src, f.tgt) != (self.hom[(a, b)] * self.hom[(b, c)], self.hom[(a, c)]):
                rep.add("comp-shape", a, b, c)
        if rep:
            return rep
        for a, b, c, d in itertools.product(L, repeat=4):
            lhs = B.compose(self.comp[(a, c, d)], B.tensor_map(self.comp[(a, b, c)], B.identity(self.hom[(c, d)])))
            rhs = B.compose(self.comp[(a, b, d)], B.tensor_map(B.identity(self.hom[(a, b)]), self.comp[(b, c, d)]))
            if lhs != rhs:
                rep.add("associativity", a, b, c, d)
        return rep

    def __eq__(self, other) -> bool:
        return (isinstance(other, SemiEnrichedCategory) and self.labels == other.labels
                and self.hom == other.hom and self.comp == other.comp)


def semicat_to_diagram(A: SemiEnrichedCategory, max_degree: int) -> LaxDiagram:
    """Constant values ``hom(A, B)``, identity actions, composition as laxity."""
    B = A.base
    return family_from_functions(
        A.labels, max_degree,
        lambda t: A.hom[(t[0], t[-1])],
        lambda t, i: B.identity(A.hom[(t[0], t[-1])]),
        B,
        laxity=lambda s, r: A.comp[(s[0], s[-1], r[-1])],
    )


def is_strict(F: Family) -> bool:
    return all(F.base.is_iso(F.actions[k]) for k in F.actions)


def diagram_to_semicat(F: LaxDiagram) -> SemiEnrichedCategory:
    """``c_ABC = F(u)^-1 o phi`` where ``u: (A,B,C) -> (A,C)``."""
    if F.max_degree < 2:
        raise PreconditionError("need degree at least 2 to read off composition")
    B = F.base
    for t, i in F.generators():
        if not B.is_iso(F.actions[(t, i)]):
            raise PreconditionError(f"action at {chain_key(t)}/{i} is not invertible")
    L = F.labels
    hom = {(a, b): F.values[(a, b)] for a in L for b in L}
    comp = {}
    for a, b, c in itertools.product(L, repeat=3):
        u = F.act(canonical_map_u_t((a, b, c)))
        comp[(a, b, c)] = B.compose(B.inverse(u), F.laxity[((a, b), (b, c))])
    out = SemiEnrichedCategory(L, hom, comp, B)
    if out.validate():  # pragma: no cover - would contradict coherence of F
        raise AssertionError("reconstructed composition is not associative")
    return out


def check_strict_units(F: LaxDiagram, units: Mapping) -> Report:
    """Left and right unit squares for candidates ``e_A: I -> F(A,A)``."""
    rep = Report()
    if not F.labels:
        return rep
    A = diagram_to_semicat(F)
    B = A.base
    for a in F.labels:
        e = units.get(a)
        if e is None or (e.src, e.tgt) != (1, A.hom[(a, a)]):
            rep.add("unit-shape", a)
    if rep:
        return rep
    for a in F.labels:
        for b in F.labels:
            left = B.compose(A.comp[(a, a, b)], B.tensor_map(units[a], B.identity(A.hom[(a, b)])))
            if left != B.identity(A.hom[(a, b)]):
                rep.add("left-unit", a, b)
            right = B.compose(A.comp[(a, b, b)], B.tensor_map(B.identity(A.hom[(a, b)]), units[b]))
            if right != B.identity(A.hom[(a, b)]):
                rep.add("right-unit", a, b)
    return rep


def find_strict_units(F: LaxDiagram) -> dict | None:
    """Search all candidate units; returns one passing family, or None."""
    B = F.base
    choices = [list(B.hom(1, F.values[(a, a)])) for a in F.labels]
    for pick in itertools.product(*choices):
        units = dict(zip(F.labels, pick))
        if not check_strict_units(F, units):
            return units
    return None


# ---------------------------------------------------------------------------
# pullback and tensor


def pullback_diagram(f: Mapping, G: Family, labels: Sequence | None = None) -> Family:
    """``(f*G)(t) = G(f o t)`` along a function on labels."""
    X = tuple(labels) if labels is not None else tuple(f)
    move = lambda t: tuple(f[x] for x in t)
    values = {t: G.values[move(t)] for t in all_chains(X, G.max_degree)}
    actions = {(t, i): G.actions[(move(t), i)] for t in values for i in range(degree(t) - 1)}
    if not G.is_lax():
        return Family(X, G.max_degree, values, actions, G.base)
    lx = {(s, r): G.laxity[(move(s), move(r))] for t in values for s, r in binary_cuts(t)}
    return LaxDiagram(X, G.max_degree, values, actions, G.base, lx)


def tensor_diagrams(F: LaxDiagram, G: LaxDiagram) -> LaxDiagram:
    """``(F (x) G)(s, s') = F(s) (x) G(s')`` over pairs of labels."""
    if F.max_degree != G.max_degree:
        raise InputError("tensor needs equal degree bounds")
    B = F.base
    labels = tuple((c, d) for c in F.labels for d in G.labels)
    left = lambda t: tuple(x[0] for x in t)
    right = lambda t: tuple(x[1] for x in t)
    values = {t: F.values[left(t)] * G.values[right(t)] for t in all_chains(labels, F.max_degree)}
    actions = {(t, i): B.tensor_map(F.actions[(left(t), i)], G.actions[(right(t), i)])
               for t in values for i in range(degree(t) - 1)}
    lx = {}
    for t in values:
        for s, r in binary_cuts(t):
            s1, s2, r1, r2 = left(s), right(s), left(r), right(r)
            swap = B.middle_swap(F.values[s1], G.values[s2], F.values[r1], G.values[r2])
            lx[(s, r)] = B.compose(B.tensor_map(F.laxity[(s1, r1)], G.laxity[(s2, r2)]), swap)
    return LaxDiagram(labels, F.max_degree, values, actions, B, lx)


def relabel(F: Family, rename: Mapping) -> Family:
    """Same data with labels renamed by a bijection."""
    inv = {v: k for k, v in rename.items()}
    return pullback_diagram(inv, F, labels=[rename[x] for x in F.labels])


def tensor_symmetry(F: LaxDiagram, G: LaxDiagram) -> Transformation:
    """``F (x) G -> (G (x) F)`` transported to the same label set, by ``sym``."""
    FG = tensor_diagrams(F, G)
    GF = tensor_diagrams(G, F)
    swap = {(c, d): (d, c) for c in F.labels for d in G.labels}
    GF_here = pullback_diagram(swap, GF, labels=FG.labels)
    B = F.base
    comps = {t: B.sym(F.values[tuple(x[0] for x in t)], G.values[tuple(x[1] for x in t)])
             for t in FG.chains()}
    return Transformation(FG, GF_here, comps)


def tensor_unit_iso(F: LaxDiagram) -> Transformation:
    """``F (x) Un -> F`` (relabelled), componentwise the right unit isomorphism."""
    FU = tensor_diagrams(F, unit_diagram(F.max_degree))
    back = {(c, "*"): c for c in F.labels}
    F_here = pullback_diagram(back, F, labels=FU.labels)
    return Transformation(FU, F_here, {t: F.base.identity(FU.values[t]) for t in FU.chains()})


# ---------------------------------------------------------------------------
# hom enumeration (brute-force oracle)


def forced_values(F: Family, G: Family, chosen: Mapping, t: Chain, use_lax: bool,
                  constraints=()) -> dict | None:
    """Component values at ``t`` forced by lower components, or ``None`` on a clash."""
    forced: dict = {}
    for i in range(degree(t) - 1):
        tgt = generator_map(t, i).target
        fa, ga, st = F.actions[(t, i)], G.actions[(t, i)], chosen[tgt]
        for x in range(fa.src):
            y, val = fa(x), ga(st(x))
            if forced.setdefault(y, val) != val:
                return None
    if use_lax:
        for s, r in binary_cuts(t):
            phi, psi = F.laxity[(s, r)], G.laxity[(s, r)]
            ss, sr = chosen[s], chosen[r]
            gr = G.values[r]
            nr = F.values[r]
            for x in range(phi.src):
                a, b = divmod(x, nr)
                val = psi(ss(a) * gr + sr(b))
                if forced.setdefault(phi(x), val) != val:
                    return None
    for P, Q in constraints:
        p, q = P[t], Q[t]
        for x in range(p.src):
            if forced.setdefault(p(x), q(x)) != q(x):
                return None
    return forced


def enumerate_morphisms(F: Family, G: Family, laxity: bool = True,
                        constraints: Sequence[tuple[Transformation, Transformation]] = (),
                        limit: int | None = None) -> Iterator[dict]:
    """All component families ``F -> G`` (natural and, if asked, laxity-compatible).

    Chains are visited degree by degree.  At each chain the values forced by
    naturality, laxity and the optional constraints ``sigma o P = Q`` are
    collected first; the remaining elements range freely over ``G(t)``.
    """
    if F.labels != G.labels or F.max_degree != G.max_degree:
        raise InputError("morphisms need equal labels and degree")
    chains = F.chains()
    use_lax = laxity and F.is_lax() and G.is_lax()
    chosen: dict = {}
    produced = [0]

    def forced_at(t):
        return forced_values(F, G, chosen, t, use_lax, constraints)

    def rec(k):
        if limit is not None and produced[0] >= limit:
            return
        if k == len(chains):
            produced[0] += 1
            yield dict(chosen)
            return
        t = chains[k]
        forced = forced_at(t)
        if forced is None:
            return
        n, m = F.values[t], G.values[t]
        free = [x for x in range(n) if x not in forced]
        if free and m == 0:
            return
        for vals in itertools.product(range(m), repeat=len(free)):
            arr = [0] * n
            for x, y in forced.items():
                arr[x] = y
            for x, y in zip(free, vals):
                arr[x] = y
            chosen[t] = FinMap(n, m, tuple(arr))
            yield from rec(k + 1)
            if limit is not None and produced[0] >= limit:
                break
        chosen.pop(t, None)

    yield from rec(0)


def count_morphisms(F: Family, G: Family, laxity: bool = True, limit: int | None = None,
                    constraints=()) -> int:
    return sum(1 for _ in enumerate_morphisms(F, G, laxity, constraints, limit))


def find_isomorphism(F: Family, G: Family, laxity: bool = True,
                     constraints=()) -> Transformation | None:
    """A level-wise bijective morphism ``F -> G``, by exhaustive search."""
    B = F.base
    if any(F.values[t] != G.values[t] for t in F.chains()):
        return None
    for comps in enumerate_morphisms(F, G, laxity, constraints):
        if all(B.is_iso(c) for c in comps.values()):
            return Transformation(F, G, comps)
    return None


# ---------------------------------------------------------------------------
# JSON


def _parse_map(data) -> FinMap:
    return FinMap.from_json(data)


def family_from_json(data: dict, lax: bool | None = None) -> Family:
    """Read the diagram (or family, without ``laxity``) JSON format."""
    try:
        labels = tuple(str(x) for x in data["objects"])
        N = int(data["max_degree"])
        raw_values = data["values"]
        raw_actions = data.get("actions", {})
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed diagram: {exc}") from exc
    if N < 1:
        raise InputError("max_degree must be at least 1")
    values = {}
    for key, v in raw_values.items():
        t = parse_chain(key)
        if any(x not in labels for x in t):
            raise InputError(f"chain {key} uses unknown labels")
        if isinstance(v, dict):
            v = v.get("size")
        if not isinstance(v, int) or v < 0:
            raise InputError(f"value at {key} must be a set size")
        values[t] = v
    chains = all_chains(labels, N)
    missing = [chain_key(t) for t in chains if t not in values]
    if missing:
        raise InputError(f"missing values for chains: {', '.join(missing[:5])}")
    actions = {}
    for key, m in raw_actions.items():
        try:
            ck, idx = key.rsplit("/", 1)
            actions[(parse_chain(ck), int(idx))] = _parse_map(m)
        except ValueError as exc:
            raise InputError(f"bad action key {key!r}") from exc
    B = _BASE
    for t in chains:
        for i in range(degree(t) - 1):
            if (t, i) not in actions:
                # omitted actions default to the identity when sizes agree
                tgt = generator_map(t, i).target
                if values[tgt] != values[t]:
                    raise InputError(f"missing action {chain_key(t)}/{i}")
                actions[(t, i)] = B.identity(values[t])
    is_lax = ("laxity" in data) if lax is None else lax
    if not is_lax:
        return Family(labels, N, values, actions, B)
    lx = {}
    raw_lax = data.get("laxity", {})
    for key, m in raw_lax.items():
        try:
            a, b = key.split("|")
        except ValueError as exc:
            raise InputError(f"bad laxity key {key!r}") from exc
        lx[(parse_chain(a), parse_chain(b))] = _parse_map(m)
    for t in chains:
        for s, r in binary_cuts(t):
            if (s, r) not in lx:
                raise InputError(f"missing laxity {chain_key(s)}|{chain_key(r)}")
    return LaxDiagram(labels, N, values, actions, B, lx)


def transformation_to_json(sigma: Transformation) -> dict:
    return {chain_key(t): sigma.components[t].to_json() for t in sigma.source.chains()}


def transformation_from_json(data: dict, F: Family, G: Family) -> Transformation:
    comps = {}
    for t in F.chains():
        key = chain_key(t)
        if key not in data:
            raise InputError(f"missing component at {key}")
        comps[t] = _parse_map(data[key])
    return Transformation(F, G, comps)

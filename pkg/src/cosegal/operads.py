"""Finite multisorted operads in finite categories and their algebras.

Operations are indexed by signatures ``((i_1, ..., i_n), j)``.  Only
signatures up to a fixed arity are stored; a missing signature means the
empty operation category.  Substitution is an explicit table on morphisms
(objects are acted on through their identities).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .base import FinMap, FinSetBase
from .errors import InputError, PreconditionError
from .fincat import FinCategory, validate_category
from .report import Report

_BASE = FinSetBase()


def terminal_category() -> FinCategory:
    return FinCategory(["*"], {"*": ("*", "*")}, {("*", "*"): "*"}, {"*": "*"})


def discrete_category(objs: Sequence) -> FinCategory:
    """Only identities; each object is its own identity morphism."""
    objs = list(objs)
    return FinCategory(objs, {o: (o, o) for o in objs}, {(o, o): o for o in objs},
                       {o: o for o in objs})


def poset_category(objs: Sequence, leq: Callable) -> FinCategory:
    """A preorder as a category; the morphism ``a <= b`` is the pair ``(a, b)``."""
    objs = list(objs)
    mors = {(a, b): (a, b) for a in objs for b in objs if leq(a, b)}
    comp = {((b, c), (a, b)): (a, c) for (a, b) in mors for (b2, c) in mors if b2 == b}
    return FinCategory(objs, mors, comp, {a: (a, a) for a in objs})


def _ids(cat: FinCategory, objs) -> tuple:
    return tuple(cat.identities[o] for o in objs)


# ---------------------------------------------------------------------------
# operads


@dataclass
class ColoredOperad:
    colors: tuple
    ops: dict                  # signature -> FinCategory (nonempty ones only)
    units: dict                # color -> object of ops[((i,), i)]
    gamma: dict                # (outer sig, inner sigs) -> {(a, bs): morphism}
    max_arity: int

    def op(self, sig) -> FinCategory | None:
        return self.ops.get(sig)

    def unit_morphism(self, i):
        return self.ops[((i,), i)].identities[self.units[i]]

    def by_output(self) -> dict:
        out: dict = {}
        for sig in self.ops:
            out.setdefault(sig[1], []).append(sig)
        return out

    def composable(self) -> Iterator[tuple]:
        """``(outer, inners)`` with total arity within the bound."""
        by_out = self.by_output()
        for outer in self.ops:
            choices = [by_out.get(i, []) for i in outer[0]]
            for inners in itertools.product(*choices):
                if sum(len(s[0]) for s in inners) <= self.max_arity:
                    yield outer, tuple(inners)

    def compose_mor(self, outer, a, inners, bs):
        return self.gamma[(outer, inners)][(a, tuple(bs))]

    def compose_obj(self, outer, x, inners, ys):
        cat_o = self.ops[outer]
        a = cat_o.identities[x]
        bs = tuple(self.ops[s].identities[y] for s, y in zip(inners, ys))
        res = composite_signature(outer, inners)
        return self.ops[res].src(self.compose_mor(outer, a, inners, bs))


def composite_signature(outer, inners) -> tuple:
    return (tuple(c for s in inners for c in s[0]), outer[1])


def operad_from_rule(colors, ops: dict, units: dict, rule: Callable, max_arity: int) -> ColoredOperad:
    """Tabulate substitution from ``rule(outer, a, inners, bs) -> morphism``."""
    O = ColoredOperad(tuple(colors), dict(ops), dict(units), {}, max_arity)
    for outer, inners in O.composable():
        res = composite_signature(outer, inners)
        if res not in O.ops:
            raise InputError(f"substitution lands in an empty operation set {res}")
        table = {}
        cats = [O.ops[outer]] + [O.ops[s] for s in inners]
        for mors in itertools.product(*[list(c.morphisms) for c in cats]):
            table[(mors[0], tuple(mors[1:]))] = rule(outer, mors[0], inners, mors[1:])
        O.gamma[(outer, inners)] = table
    return O


def _nerve_tuples(X, n: int):
    for path in itertools.product(X, repeat=n + 1):
        yield tuple((path[k], path[k + 1]) for k in range(n)), (path[0], path[-1])


def build_ox(X: Sequence, max_arity: int = 3, nullary: bool = True) -> ColoredOperad:
    """Colors are pairs of ``X``; the operation category is terminal exactly
    on composable tuples with the matching composite and on nullary diagonal
    signatures, and empty otherwise."""
    X = tuple(X)
    if not X:
        raise InputError("O_X needs a nonempty set")
    colors = tuple((a, b) for a in X for b in X)
    ops = {}
    for a in X if nullary else ():
        ops[((), (a, a))] = terminal_category()
    for n in range(1, max_arity + 1):
        for ins, out in _nerve_tuples(X, n):
            ops[(ins, out)] = terminal_category()
    units = {c: "*" for c in colors}
    return operad_from_rule(colors, ops, units, lambda *args: "*", max_arity)


def z2_operad(max_arity: int = 3, broken: bool = False, nullary: bool = True) -> ColoredOperad:
    """One color; every arity has the discrete category ``{0, 1}`` and
    substitution adds modulo 2.  ``broken`` ignores all but the first input."""
    c = "*"
    lo = 0 if nullary else 1
    ops = {(tuple([c] * n), c): discrete_category([0, 1]) for n in range(lo, max_arity + 1)}
    units = {c: 0}

    def rule(outer, a, inners, bs):
        if broken and len(bs) > 1:
            return (a + bs[0]) % 2
        return (a + sum(bs)) % 2

    return operad_from_rule((c,), ops, units, rule, max_arity)


def validate_operad(O: ColoredOperad) -> Report:
    """Typing, functoriality, unit and associativity laws of substitution."""
    rep = Report()
    for sig, cat in O.ops.items():
        if len(sig[0]) > O.max_arity:
            rep.add("arity-bound", sig)
        sub = validate_category(cat)
        if sub:
            rep.add("operation-category", sig, detail=str(sub.kinds()))
    for i in O.colors:
        usig = ((i,), i)
        if usig not in O.ops or O.units.get(i) not in O.ops[usig].objects:
            rep.add("unit-missing", i)
    if rep:
        return rep
    for outer, inners in O.composable():
        table = O.gamma.get((outer, inners))
        res = composite_signature(outer, inners)
        if table is None or res not in O.ops:
            rep.add("substitution-missing", outer, inners)
            continue
        cats = [O.ops[outer]] + [O.ops[s] for s in inners]
        rc = O.ops[res]
        for mors in itertools.product(*[list(c.morphisms) for c in cats]):
            m = table.get((mors[0], tuple(mors[1:])))
            if m is None:
                rep.add("substitution-partial", outer, inners, mors)
                break
            if m not in rc.morphisms:
                rep.add("substitution-typing", outer, inners, mors[0])
    if rep:
        return rep
    for outer, inners in O.composable():
        table = O.gamma[(outer, inners)]
        cats = [O.ops[outer]] + [O.ops[s] for s in inners]
        rc = O.ops[composite_signature(outer, inners)]
        # identities and composition
        for objs in itertools.product(*[c.objects for c in cats]):
            ids = [c.identities[o] for c, o in zip(cats, objs)]
            img = table[(ids[0], tuple(ids[1:]))]
            if not rc.is_identity(img):
                rep.add("substitution-identity", outer, inners, objs)
        for fs in itertools.product(*[list(c.morphisms) for c in cats]):
            for gs in itertools.product(*[[g for g in c.morphisms if c.src(g) == c.tgt(f)]
                                          for c, f in zip(cats, fs)]):
                gf = [c.comp(g, f) for c, g, f in zip(cats, gs, fs)]
                lhs = table[(gf[0], tuple(gf[1:]))]
                rhs = rc.comp(table[(gs[0], tuple(gs[1:]))], table[(fs[0], tuple(fs[1:]))])
                if lhs != rhs:
                    rep.add("substitution-functoriality", outer, inners)
                    break
    if rep:
        return rep
    # unit laws
    for sig, cat in O.ops.items():
        ins, out = sig
        for a in cat.morphisms:
            left = O.compose_mor(((out,), out), O.unit_morphism(out), (sig,), (a,))
            if left != a:
                rep.add("left-unit", sig, a)
            if len(ins) <= O.max_arity:
                us = tuple(((i,), i) for i in ins)
                right = O.compose_mor(sig, a, us, tuple(O.unit_morphism(i) for i in ins))
                if right != a:
                    rep.add("right-unit", sig, a)
    # associativity: gamma(gamma(x; y.); z..) = gamma(x; gamma(y_k; z_k.))
    by_out = O.by_output()
    for outer, inners in O.composable():
        mid = composite_signature(outer, inners)
        for zs in itertools.product(*[by_out.get(c, []) for c in mid[0]]):
            if sum(len(s[0]) for s in zs) > O.max_arity:
                continue
            groups, k = [], 0
            for s in inners:
                groups.append(tuple(zs[k:k + len(s[0])]))
                k += len(s[0])
            new_inners = tuple(composite_signature(s, g) for s, g in zip(inners, groups))
            cats = [O.ops[outer]] + [O.ops[s] for s in inners] + [O.ops[s] for s in zs]
            for mors in itertools.product(*[list(c.morphisms) for c in cats]):
                a = mors[0]
                bs = mors[1:1 + len(inners)]
                cs = mors[1 + len(inners):]
                lhs = O.compose_mor(mid, O.compose_mor(outer, a, inners, bs), zs, cs)
                inner_vals, k = [], 0
                for s, b, g in zip(inners, bs, groups):
                    inner_vals.append(O.compose_mor(s, b, g, cs[k:k + len(g)]))
                    k += len(g)
                rhs = O.compose_mor(outer, a, new_inners, inner_vals)
                if lhs != rhs:
                    rep.add("associativity", outer, inners, zs)
                    break
    return rep


# ---------------------------------------------------------------------------
# algebras


@dataclass
class OAlgebra:
    """Categories per color and action tables ``sig -> {(a, ms): morphism}``.

    Entries may be missing when the action is only partially tabulated (free
    algebras truncated by arity); laws are checked where all entries exist.
    """

    operad: ColoredOperad
    cats: dict
    action: dict

    def act(self, sig, a, ms):
        return self.action[sig][(a, tuple(ms))]

    def act_obj(self, sig, x, cs):
        O = self.operad
        a = O.ops[sig].identities[x]
        ms = tuple(self.cats[i].identities[c] for i, c in zip(sig[0], cs))
        out = self.action[sig].get((a, ms))
        return None if out is None else self.cats[sig[1]].src(out)

    def defined(self, sig, a, ms) -> bool:
        return (a, tuple(ms)) in self.action.get(sig, {})


def algebra_from_rule(O: ColoredOperad, cats: dict, rule: Callable) -> OAlgebra:
    action = {}
    for sig, cat in O.ops.items():
        table = {}
        for mors in itertools.product(cat.morphisms, *[list(cats[i].morphisms) for i in sig[0]]):
            val = rule(sig, mors[0], mors[1:])
            if val is not None:
                table[(mors[0], tuple(mors[1:]))] = val
        action[sig] = table
    return OAlgebra(O, dict(cats), action)


def validate_algebra(M: OAlgebra) -> Report:
    """Functoriality of each action, compatibility with substitution and units."""
    rep = Report()
    O = M.operad
    for sig, table in M.action.items():
        out = M.cats[sig[1]]
        src_cats = [O.ops[sig]] + [M.cats[i] for i in sig[0]]
        for (a, ms), m in table.items():
            if m not in out.morphisms:
                rep.add("action-typing", sig, a)
                continue
            fs = (a,) + ms
            ident = all(c.is_identity(f) for c, f in zip(src_cats, fs))
            if ident and not out.is_identity(m):
                rep.add("action-identity", sig, a, ms)
            for gs in itertools.product(*[[g for g in c.morphisms if c.src(g) == c.tgt(f)]
                                          for c, f in zip(src_cats, fs)]):
                gf = tuple(c.comp(g, f) for c, g, f in zip(src_cats, gs, fs))
                key_g, key_gf = (gs[0], tuple(gs[1:])), (gf[0], tuple(gf[1:]))
                if key_g in table and key_gf in table and table[key_gf] != out.comp(table[key_g], m):
                    rep.add("action-functoriality", sig, a, ms)
    for i in O.colors:
        u = O.unit_morphism(i)
        for f in M.cats[i].morphisms:
            if M.action[((i,), i)].get((u, (f,)), f) != f:
                rep.add("action-unit", i, f)
    for outer, inners in O.composable():
        res = composite_signature(outer, inners)
        cats_in = [M.cats[c] for c in res[0]]
        for a in O.ops[outer].morphisms:
            for bs in itertools.product(*[list(O.ops[s].morphisms) for s in inners]):
                g = O.compose_mor(outer, a, inners, bs)
                for ms in itertools.product(*[list(c.morphisms) for c in cats_in]):
                    if not M.defined(res, g, ms):
                        continue
                    inner_vals, k, ok = [], 0, True
                    for s, b in zip(inners, bs):
                        part = ms[k:k + len(s[0])]
                        k += len(s[0])
                        if not M.defined(s, b, part):
                            ok = False
                            break
                        inner_vals.append(M.act(s, b, part))
                    if not ok or not M.defined(outer, a, inner_vals):
                        continue
                    if M.act(res, g, ms) != M.act(outer, a, inner_vals):
                        rep.add("action-associativity", outer, inners, a, bs)
    return rep


# ---------------------------------------------------------------------------
# O_X-algebras and 2-categories


@dataclass
class TwoCategoryData:
    """Strict 2-category: hom categories, composition tables on morphisms, units.

    ``comp[(A, B, C)][(f, g)]`` is the horizontal composite of ``f`` in
    ``hom[(A, B)]`` and ``g`` in ``hom[(B, C)]``.
    """

    objects: tuple
    hom: dict
    comp: dict
    units: dict

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwoCategoryData):
            return NotImplemented
        return (self.objects == other.objects and self.units == other.units
                and self.comp == other.comp
                and all(_same_category(self.hom[k], other.hom[k]) for k in self.hom)
                and set(self.hom) == set(other.hom))


def _same_category(c1: FinCategory, c2: FinCategory) -> bool:
    return (list(c1.objects) == list(c2.objects) and c1.morphisms == c2.morphisms
            and c1.compose == c2.compose and c1.identities == c2.identities)


def validate_twocategory(T: TwoCategoryData) -> Report:
    rep = Report()
    ob = T.objects
    for a, b, c in itertools.product(ob, repeat=3):
        H1, H2, H3 = T.hom[(a, b)], T.hom[(b, c)], T.hom[(a, c)]
        table = T.comp[(a, b, c)]
        for f in H1.morphisms:
            for g in H2.morphisms:
                m = table.get((f, g))
                if m not in H3.morphisms:
                    rep.add("comp-typing", (a, b, c), f, g)
                    continue
        for f, f2 in [(f, f2) for f in H1.morphisms for f2 in H1.morphisms if H1.src(f2) == H1.tgt(f)]:
            for g, g2 in [(g, g2) for g in H2.morphisms for g2 in H2.morphisms if H2.src(g2) == H2.tgt(g)]:
                if table[(H1.comp(f2, f), H2.comp(g2, g))] != H3.comp(table[(f2, g2)], table[(f, g)]):
                    rep.add("interchange", (a, b, c), f, g)
        for o in H1.objects:
            for p in H2.objects:
                if not H3.is_identity(table[(H1.identities[o], H2.identities[p])]):
                    rep.add("comp-identity", (a, b, c), o, p)
    for a, b in itertools.product(ob, repeat=2):
        H = T.hom[(a, b)]
        ua = T.hom[(a, a)].identities[T.units[a]]
        ub = T.hom[(b, b)].identities[T.units[b]]
        for f in H.morphisms:
            if T.comp[(a, a, b)][(ua, f)] != f or T.comp[(a, b, b)][(f, ub)] != f:
                rep.add("unit", (a, b), f)
    for a, b, c, d in itertools.product(ob, repeat=4):
        for f in T.hom[(a, b)].morphisms:
            for g in T.hom[(b, c)].morphisms:
                for h in T.hom[(c, d)].morphisms:
                    left = T.comp[(a, c, d)][(T.comp[(a, b, c)][(f, g)], h)]
                    right = T.comp[(a, b, d)][(f, T.comp[(b, c, d)][(g, h)])]
                    if left != right:
                        rep.add("associativity", (a, b, c, d), f, g, h)
    return rep


def twocat_to_algebra(T: TwoCategoryData, max_arity: int = 3) -> OAlgebra:
    """The ``O_X``-algebra acting by iterated (left-nested) composition."""
    O = build_ox(T.objects, max_arity)
    cats = {(a, b): T.hom[(a, b)] for a in T.objects for b in T.objects}

    def rule(sig, a, ms):
        ins, (A, B) = sig
        if not ins:
            return T.hom[(A, A)].identities[T.units[A]]
        cur, src = ms[0], ins[0][0]
        for (x, y), m in zip(ins[1:], ms[1:]):
            cur = T.comp[(src, x, y)][(cur, m)]
        return cur

    return algebra_from_rule(O, cats, rule)


def algebra_to_twocat(M: OAlgebra) -> TwoCategoryData:
    """Hom categories are the color categories; composition and units are the
    actions of the binary and nullary operations."""
    colors = M.operad.colors
    objects = tuple(dict.fromkeys(a for a, _ in colors))
    hom = {c: M.cats[c] for c in colors}
    comp = {}
    for a, b, c in itertools.product(objects, repeat=3):
        sig = (((a, b), (b, c)), (a, c))
        comp[(a, b, c)] = {(f, g): M.act(sig, "*", (f, g))
                           for f in hom[(a, b)].morphisms for g in hom[(b, c)].morphisms}
    units = {}
    for a in objects:
        m = M.act(((), (a, a)), "*", ())
        units[a] = hom[(a, a)].src(m)
    return TwoCategoryData(objects, hom, comp, units)


def monoidal_twocat(cat: FinCategory, tensor: Callable, unit, label="*") -> TwoCategoryData:
    """One-object 2-category from a strict monoidal finite category."""
    table = {(f, g): tensor(f, g) for f in cat.morphisms for g in cat.morphisms}
    return TwoCategoryData((label,), {(label, label): cat}, {(label, label, label): table},
                           {label: unit})


def coarse_twocat(X: Sequence) -> TwoCategoryData:
    X = tuple(X)
    hom = {(a, b): terminal_category() for a in X for b in X}
    comp = {(a, b, c): {("*", "*"): "*"} for a in X for b in X for c in X}
    return TwoCategoryData(X, hom, comp, {a: "*" for a in X})


# ---------------------------------------------------------------------------
# lax morphisms of algebras


@dataclass
class LaxOMorphism:
    """Functors per color and laxity components
    ``laxity[(sig, x, cs)]: theta_N(x; F c.) -> F(theta_M(x; c.))``."""

    source: OAlgebra
    target: OAlgebra
    objects: dict        # color -> {object: object}
    morphisms: dict      # color -> {morphism: morphism}
    laxity: dict

    def F(self, i, f):
        return self.morphisms[i][f]

    def Fo(self, i, c):
        return self.objects[i][c]


def _lax_keys(M: OAlgebra) -> Iterator[tuple]:
    O = M.operad
    for sig, cat in O.ops.items():
        for x in cat.objects:
            for cs in itertools.product(*[M.cats[i].objects for i in sig[0]]):
                if M.act_obj(sig, x, cs) is not None:
                    yield sig, x, cs


def validate_lax_o(F: LaxOMorphism) -> Report:
    """Functoriality, typing and naturality of laxity, unit and coherence."""
    rep = Report()
    M, N = F.source, F.target
    O = M.operad
    for i in O.colors:
        S, T = M.cats[i], N.cats[i]
        for f, (s, t) in S.morphisms.items():
            if T.morphisms.get(F.F(i, f)) != (F.Fo(i, s), F.Fo(i, t)):
                rep.add("functor-typing", i, f)
        for (g, f), gf in S.compose.items():
            if F.F(i, gf) != T.compose.get((F.F(i, g), F.F(i, f))):
                rep.add("functor-composition", i, g, f)
        for o in S.objects:
            if not T.is_identity(F.F(i, S.identities[o])):
                rep.add("functor-identity", i, o)
    if rep:
        return rep
    for sig, x, cs in _lax_keys(M):
        j = sig[1]
        phi = F.laxity.get((sig, x, cs))
        src = N.act_obj(sig, x, [F.Fo(i, c) for i, c in zip(sig[0], cs)])
        tgt = F.Fo(j, M.act_obj(sig, x, cs))
        if phi is None or N.cats[j].morphisms.get(phi) != (src, tgt):
            rep.add("laxity-typing", sig, x, cs)
    if rep:
        return rep
    # naturality in (a, f.)
    for sig, cat in O.ops.items():
        j = sig[1]
        Nj = N.cats[j]
        for (a, fs), m in M.action[sig].items():
            x, x2 = cat.src(a), cat.tgt(a)
            cs = tuple(M.cats[i].src(f) for i, f in zip(sig[0], fs))
            ds = tuple(M.cats[i].tgt(f) for i, f in zip(sig[0], fs))
            Ffs = tuple(F.F(i, f) for i, f in zip(sig[0], fs))
            if not N.defined(sig, a, Ffs):
                continue
            lhs = Nj.comp(F.F(j, m), F.laxity[(sig, x, cs)])
            rhs = Nj.comp(F.laxity[(sig, x2, ds)], N.act(sig, a, Ffs))
            if lhs != rhs:
                rep.add("laxity-naturality", sig, a, fs)
    # unit
    for i in O.colors:
        usig = ((i,), i)
        for c in M.cats[i].objects:
            if not N.cats[i].is_identity(F.laxity[(usig, O.units[i], (c,))]):
                rep.add("laxity-unit", i, c)
    # coherence
    for outer, inners in O.composable():
        res = composite_signature(outer, inners)
        j = outer[1]
        Nj = N.cats[j]
        for x in O.ops[outer].objects:
            for ys in itertools.product(*[O.ops[s].objects for s in inners]):
                z = O.compose_obj(outer, x, inners, ys)
                for ds in itertools.product(*[M.cats[i].objects for i in res[0]]):
                    key_res = (res, z, ds)
                    if key_res not in F.laxity:
                        continue
                    cs, phis, k, ok = [], [], 0, True
                    for s, y in zip(inners, ys):
                        part = ds[k:k + len(s[0])]
                        k += len(s[0])
                        c = M.act_obj(s, y, part)
                        if c is None:
                            ok = False
                            break
                        cs.append(c)
                        phis.append(F.laxity[(s, y, part)])
                    if not ok or (outer, x, tuple(cs)) not in F.laxity:
                        continue
                    idx = O.ops[outer].identities[x]
                    if not N.defined(outer, idx, phis):
                        continue
                    rhs = Nj.comp(F.laxity[(outer, x, tuple(cs))], N.act(outer, idx, phis))
                    if F.laxity[key_res] != rhs:
                        rep.add("laxity-coherence", outer, inners, x, ys, ds)
    return rep


def identity_lax_o(M: OAlgebra) -> LaxOMorphism:
    objects = {i: {o: o for o in c.objects} for i, c in M.cats.items()}
    morphisms = {i: {f: f for f in c.morphisms} for i, c in M.cats.items()}
    laxity = {}
    for sig, x, cs in _lax_keys(M):
        j = sig[1]
        laxity[(sig, x, cs)] = M.cats[j].identities[M.act_obj(sig, x, cs)]
    return LaxOMorphism(M, M, objects, morphisms, laxity)


def compose_lax_o(G: LaxOMorphism, F: LaxOMorphism) -> LaxOMorphism:
    """``G o F`` with laxity ``G(phi(x, c.)) o psi(x, F c.)``."""
    M, P = F.source, G.target
    objects = {i: {o: G.Fo(i, F.Fo(i, o)) for o in M.cats[i].objects} for i in M.cats}
    morphisms = {i: {f: G.F(i, F.F(i, f)) for f in M.cats[i].morphisms} for i in M.cats}
    laxity = {}
    for sig, x, cs in _lax_keys(M):
        j = sig[1]
        Fcs = tuple(F.Fo(i, c) for i, c in zip(sig[0], cs))
        psi = G.laxity[(sig, x, Fcs)]
        laxity[(sig, x, cs)] = P.cats[j].comp(G.F(j, F.laxity[(sig, x, cs)]), psi)
    return LaxOMorphism(M, P, objects, morphisms, laxity)


def lax_o_equal(F: LaxOMorphism, G: LaxOMorphism) -> bool:
    return F.objects == G.objects and F.morphisms == G.morphisms and F.laxity == G.laxity


@dataclass
class LaxOTransformation:
    """Components ``sigma_c: F c -> G c`` compatible with the laxity maps."""

    source: LaxOMorphism
    target: LaxOMorphism
    components: dict     # color -> {object: morphism}


def validate_lax_o_transformation(s: LaxOTransformation) -> Report:
    rep = Report()
    F, G = s.source, s.target
    M, N = F.source, F.target
    for i, cat in M.cats.items():
        T = N.cats[i]
        for f, (a, b) in cat.morphisms.items():
            if T.comp(s.components[i][b], F.F(i, f)) != T.comp(G.F(i, f), s.components[i][a]):
                rep.add("naturality", i, f)
    for sig, x, cs in _lax_keys(M):
        j = sig[1]
        comps = [s.components[i][c] for i, c in zip(sig[0], cs)]
        idx = M.operad.ops[sig].identities[x]
        if not N.defined(sig, idx, comps):
            continue
        lhs = N.cats[j].comp(s.components[j][M.act_obj(sig, x, cs)], F.laxity[(sig, x, cs)])
        rhs = N.cats[j].comp(G.laxity[(sig, x, cs)], N.act(sig, idx, comps))
        if lhs != rhs:
            rep.add("laxity-square", sig, x, cs)
    return rep


def compose_lax_o_transformations(t: LaxOTransformation, s: LaxOTransformation) -> LaxOTransformation:
    """Vertical composite ``t o s``."""
    N = s.source.target
    comps = {i: {c: N.cats[i].comp(t.components[i][c], s.components[i][c]) for c in s.components[i]}
             for i in s.components}
    return LaxOTransformation(s.source, t.target, comps)


# ---------------------------------------------------------------------------
# the Grothendieck operad of an algebra


@dataclass
class OperadMorphism:
    source: ColoredOperad
    target: ColoredOperad
    color_map: dict
    functors: dict       # sig -> {morphism: morphism}


def grothendieck_operad(C: OAlgebra) -> tuple[ColoredOperad, OperadMorphism]:
    """Colors ``(i, c)``; operations ``(x, h: theta(x; c.) -> d)`` with morphisms
    the ``a: x -> x'`` satisfying ``h' o theta(a; id) = h``."""
    O = C.operad
    colors = tuple((i, c) for i in O.colors for c in C.cats[i].objects)
    ops, proj = {}, {}
    for sig, cat in O.ops.items():
        ins, j = sig
        Cj = C.cats[j]
        for cs in itertools.product(*[C.cats[i].objects for i in ins]):
            ids = tuple(C.cats[i].identities[c] for i, c in zip(ins, cs))
            for d in Cj.objects:
                objs = []
                for x in cat.objects:
                    src = C.act_obj(sig, x, cs)
                    if src is None:
                        continue
                    objs.extend((x, h) for h in Cj.hom(src, d))
                if not objs:
                    continue
                mors = {}
                for (x, h) in objs:
                    for (x2, h2) in objs:
                        for a in cat.hom(x, x2):
                            if (a, ids) in C.action[sig] and Cj.comp(h2, C.act(sig, a, ids)) == h:
                                mors[(a, h, h2)] = ((x, h), (x2, h2))
                comp = {}
                for g, (gs, gt) in mors.items():
                    for f, (fs, ft) in mors.items():
                        if ft == gs:
                            comp[(g, f)] = (cat.comp(g[0], f[0]), f[1], g[2])
                idents = {(x, h): (cat.identities[x], h, h) for (x, h) in objs}
                gsig = (tuple(zip(ins, cs)), (j, d))
                ops[gsig] = FinCategory(objs, mors, comp, idents)
                proj[gsig] = {m: m[0] for m in mors}
    units = {(i, c): (O.units[i], C.cats[i].identities[c]) for (i, c) in colors}

    def rule(outer, a, inners, bs):
        # a = (a0, h, h2) over outer = (((i1,c1),..), (j, d)); inners provide h_k: theta(y_k; ..) -> c_k
        ins, (j, d) = outer
        base_outer = (tuple(i for i, _ in ins), j)
        base_inners = tuple((tuple(i for i, _ in s[0]), s[1][0]) for s in inners)
        g = O.compose_mor(base_outer, a[0], base_inners, tuple(b[0] for b in bs))
        x = O.ops[base_outer].src(a[0])
        hs_src = tuple(b[1] for b in bs)
        hs_tgt = tuple(b[2] for b in bs)
        # theta(x; h_1.., h_n) then h
        idx = O.ops[base_outer].identities[x]
        x2 = O.ops[base_outer].tgt(a[0])
        idx2 = O.ops[base_outer].identities[x2]
        h_new = C.cats[j].comp(a[1], C.act(base_outer, idx, hs_src))
        h_new2 = C.cats[j].comp(a[2], C.act(base_outer, idx2, hs_tgt))
        return (g, h_new, h_new2)

    GO = ColoredOperad(colors, ops, units, {}, O.max_arity)
    for outer, inners in GO.composable():
        res = composite_signature(outer, inners)
        if res not in GO.ops:
            continue
        table = {}
        cats = [GO.ops[outer]] + [GO.ops[s] for s in inners]
        for mors in itertools.product(*[list(c.morphisms) for c in cats]):
            table[(mors[0], tuple(mors[1:]))] = rule(outer, mors[0], inners, mors[1:])
        GO.gamma[(outer, inners)] = table
    pi = OperadMorphism(GO, O, {(i, c): i for (i, c) in colors}, proj)
    return GO, pi


def validate_operad_morphism(p: OperadMorphism) -> Report:
    """Substitution, units and categories are preserved."""
    rep = Report()
    S, T = p.source, p.target
    for sig, fmap in p.functors.items():
        tsig = (tuple(p.color_map[c] for c in sig[0]), p.color_map[sig[1]])
        tc, sc = T.ops.get(tsig), S.ops[sig]
        if tc is None:
            rep.add("target-missing", sig)
            continue
        for (g, f), gf in sc.compose.items():
            if fmap[gf] != tc.comp(fmap[g], fmap[f]):
                rep.add("functor-composition", sig, g, f)
    for i in S.colors:
        u = S.unit_morphism(i)
        if p.functors[((i,), i)][u] != T.unit_morphism(p.color_map[i]):
            rep.add("unit", i)
    for (outer, inners), table in S.gamma.items():
        res = composite_signature(outer, inners)
        tout = (tuple(p.color_map[c] for c in outer[0]), p.color_map[outer[1]])
        tin = tuple((tuple(p.color_map[c] for c in s[0]), p.color_map[s[1]]) for s in inners)
        for (a, bs), m in table.items():
            lhs = p.functors[res][m]
            rhs = T.compose_mor(tout, p.functors[outer][a], tin,
                                tuple(p.functors[s][b] for s, b in zip(inners, bs)))
            if lhs != rhs:
                rep.add("substitution", outer, inners, a)
    return rep


# ---------------------------------------------------------------------------
# identity reflection


def check_iro(C: OAlgebra) -> tuple[bool, tuple | None]:
    """Does every action functor reflect identities?  Returns a witness
    ``(sig, a, ms)`` when some non-identity tuple acts as an identity."""
    O = C.operad
    for sig, table in C.action.items():
        opc = O.ops[sig]
        out = C.cats[sig[1]]
        for (a, ms), m in table.items():
            if out.is_identity(m):
                if not (opc.is_identity(a) and all(C.cats[i].is_identity(f) for i, f in zip(sig[0], ms))):
                    return False, (sig, a, ms)
    return True, None


# ---------------------------------------------------------------------------
# free algebras and free lax morphisms into sets


@dataclass
class FreeAlgebra(OAlgebra):
    """The free algebra on generator sets, truncated at the operad's arity.

    An object of color ``j`` is ``(sig, x, gens)`` with ``x`` an object of
    ``O(sig)``, ``sig`` of output ``j`` and ``gens`` generators of the input
    colors; ``presentation`` is that triple.
    """

    generators: dict = field(default_factory=dict)


def free_algebra(O: ColoredOperad, generators: dict) -> FreeAlgebra:
    """Free algebra on discrete generator sets (requires discrete operations)."""
    for sig, cat in O.ops.items():
        if any(not cat.is_identity(f) for f in cat.morphisms):
            raise PreconditionError("free algebras are built for discrete operation categories")
    objs: dict = {i: [] for i in O.colors}
    for sig, cat in O.ops.items():
        for gens in itertools.product(*[generators.get(i, []) for i in sig[0]]):
            for x in cat.objects:
                objs[sig[1]].append((sig, x, tuple(gens)))
    cats = {i: discrete_category(v) for i, v in objs.items()}
    action = {}
    for sig, cat in O.ops.items():
        table = {}
        for x in cat.objects:
            for cs in itertools.product(*[objs[i] for i in sig[0]]):
                inners = tuple(c[0] for c in cs)
                if sum(len(s[0]) for s in inners) > O.max_arity:
                    continue
                z = O.compose_obj(sig, x, inners, tuple(c[1] for c in cs))
                res = composite_signature(sig, inners)
                table[(x, tuple(cs))] = (res, z, tuple(g for c in cs for g in c[2]))
        action[sig] = table
    return FreeAlgebra(O, cats, action, generators=dict(generators))


def presentations(C: FreeAlgebra, j, c) -> list[tuple]:
    """All ``(sig, x, cs)`` with ``theta(x; cs) = c``."""
    out = []
    for sig, table in C.action.items():
        if sig[1] != j:
            continue
        for (x, cs), val in table.items():
            if val == c:
                out.append((sig, x, cs))
    return out


@dataclass
class SetLaxMorphism:
    """A lax morphism from a free algebra into finite sets with the cartesian
    action: sizes per object and laxity maps ``prod F(c_k) -> F(theta(x; c.))``."""

    algebra: FreeAlgebra
    values: dict         # (color, object) -> size
    laxity: dict         # (sig, x, cs) -> FinMap


def _prod_size(sizes) -> int:
    n = 1
    for s in sizes:
        n *= s
    return n


def _prod_map(maps: Sequence[FinMap]) -> FinMap:
    return _BASE.tensor_maps(list(maps))


def validate_set_lax(F: SetLaxMorphism) -> Report:
    """Typing, unit and coherence of the laxity maps."""
    rep = Report()
    C = F.algebra
    O = C.operad
    B = _BASE
    # with nullary operations, arity truncation can leave some laxity undefined
    partial = any(not sig[0] for sig in O.ops)
    for sig, table in C.action.items():
        for (x, cs), c in table.items():
            phi = F.laxity.get((sig, x, cs))
            if phi is None:
                if not partial:
                    rep.add("laxity-missing", sig, x, cs)
                continue
            src = _prod_size(F.values[(i, d)] for i, d in zip(sig[0], cs))
            if (phi.src, phi.tgt) != (src, F.values[(sig[1], c)]):
                rep.add("laxity-typing", sig, x, cs)
    if rep:
        return rep
    for i in O.colors:
        for c in C.cats[i].objects:
            if F.laxity[(((i,), i), O.units[i], (c,))] != B.identity(F.values[(i, c)]):
                rep.add("laxity-unit", i, c)
    for outer, inners in O.composable():
        res = composite_signature(outer, inners)
        for x in O.ops[outer].objects:
            for ys in itertools.product(*[O.ops[s].objects for s in inners]):
                z = O.compose_obj(outer, x, inners, ys)
                for ds in itertools.product(*[C.cats[i].objects for i in res[0]]):
                    if (z, ds) not in C.action[res] or (res, z, ds) not in F.laxity:
                        continue
                    cs, phis, k, ok = [], [], 0, True
                    for s, y in zip(inners, ys):
                        part = tuple(ds[k:k + len(s[0])])
                        k += len(s[0])
                        if (y, part) not in C.action[s]:
                            ok = False
                            break
                        cs.append(C.action[s][(y, part)])
                        phis.append(F.laxity.get((s, y, part)))
                    if not ok or None in phis or (outer, x, tuple(cs)) not in F.laxity:
                        continue
                    rhs = B.compose(F.laxity[(outer, x, tuple(cs))], _prod_map(phis))
                    if F.laxity[(res, z, ds)] != rhs:
                        rep.add("laxity-coherence", outer, inners, x, ys)
    return rep


def free_lax_o(C: FreeAlgebra, sizes: dict) -> tuple[SetLaxMorphism, dict]:
    """Free lax morphism on object sizes ``sizes[(color, object)]``.

    The value at ``c`` is the coproduct, over presentations ``(x; c_1..c_n)``
    of ``c``, of ``prod sizes(c_k)``; laxity concatenates presentations.
    Returns the morphism and the summand offsets ``{(color, c): {pres: offset}}``.
    """
    if not isinstance(C, FreeAlgebra):
        raise PreconditionError("free lax morphisms need a free algebra")
    O = C.operad
    offsets, values, summand = {}, {}, {}
    for j in O.colors:
        for c in C.cats[j].objects:
            offs, n = {}, 0
            for p in presentations(C, j, c):
                offs[p] = n
                summand[p] = _prod_size(sizes.get((i, d), 0) for i, d in zip(p[0][0], p[2]))
                n += summand[p]
            offsets[(j, c)] = offs
            values[(j, c)] = n
    laxity = {}
    for sig, table in C.action.items():
        for (x, cs), c in table.items():
            # an element is one summand per input: (presentation_k, element of its product)
            src_sizes = [values[(i, d)] for i, d in zip(sig[0], cs)]
            arr = []
            for idx in itertools.product(*[range(s) for s in src_sizes]):
                pres, elems = [], []
                for i, d, e in zip(sig[0], cs, idx):
                    p, off = _locate(offsets[(i, d)], summand, e)
                    pres.append(p)
                    elems.append(_unrank(e - off, [sizes.get((ii, dd), 0) for ii, dd in zip(p[0][0], p[2])]))
                inner_sigs = tuple(p[0] for p in pres)
                if sum(len(s[0]) for s in inner_sigs) > O.max_arity:
                    arr.append(None)
                    continue
                z = O.compose_obj(sig, x, inner_sigs, tuple(p[1] for p in pres))
                res = composite_signature(sig, inner_sigs)
                new_cs = tuple(d for p in pres for d in p[2])
                key = (res, z, new_cs)
                flat = [v for e in elems for v in e]
                flat_sizes = [sizes.get((i, d), 0) for i, d in zip(res[0], new_cs)]
                arr.append(offsets[(sig[1], c)][key] + _rank(flat, flat_sizes))
            if any(v is None for v in arr):
                continue
            laxity[(sig, x, cs)] = FinMap(_prod_size(src_sizes), values[(sig[1], c)], tuple(arr))
    return SetLaxMorphism(C, values, laxity), offsets


def _locate(offs: dict, sizes: dict, e: int):
    for p, o in offs.items():
        if o <= e < o + sizes[p]:
            return p, o
    raise AssertionError("element outside every summand")


def _rank(vals, sizes) -> int:
    r = 0
    for v, s in zip(vals, sizes):
        r = r * s + v
    return r


def _unrank(r: int, sizes) -> list:
    out = []
    for s in reversed(sizes):
        out.append(r % s)
        r //= s
    return out[::-1]


def set_lax_homs(F: SetLaxMorphism, G: SetLaxMorphism, limit: int | None = None) -> Iterator[dict]:
    """Morphisms ``F -> G``: maps per object commuting with laxity, by search."""
    C = F.algebra
    keys = sorted(F.values, key=lambda k: (len(k[1][2]), len(k[1][0][0]), repr(k)))
    chosen: dict = {}
    count = [0]

    def forced(key):
        out: dict = {}
        j, c = key
        for (sig, x, cs), phi in F.laxity.items():
            if sig[1] != j or C.action[sig][(x, cs)] != c:
                continue
            if any((i, d) not in chosen for i, d in zip(sig[0], cs)):
                continue
            psi = G.laxity.get((sig, x, cs))
            if psi is None:
                continue
            comps = _prod_map([chosen[(i, d)] for i, d in zip(sig[0], cs)])
            for e in range(phi.src):
                val = psi(comps(e))
                if out.setdefault(phi(e), val) != val:
                    return None
        return out

    def rec(k):
        if limit is not None and count[0] >= limit:
            return
        if k == len(keys):
            count[0] += 1
            yield dict(chosen)
            return
        key = keys[k]
        fx = forced(key)
        if fx is None:
            return
        n, m = F.values[key], G.values[key]
        free = [e for e in range(n) if e not in fx]
        if free and m == 0:
            return
        for vals in itertools.product(range(m), repeat=len(free)):
            arr = [0] * n
            for e, v in fx.items():
                arr[e] = v
            for e, v in zip(free, vals):
                arr[e] = v
            chosen[key] = FinMap(n, m, tuple(arr))
            yield from _check_then(rec, k, key)
        chosen.pop(key, None)

    def _check_then(rec_fn, k, key):
        # laxity squares landing in already chosen objects whose inputs include key
        for (sig, x, cs), phi in F.laxity.items():
            tgt = (sig[1], C.action[sig][(x, cs)])
            ins = [(i, d) for i, d in zip(sig[0], cs)]
            if key not in ins and tgt != key:
                continue
            if tgt not in chosen or any(p not in chosen for p in ins) or (sig, x, cs) not in G.laxity:
                continue
            lhs = _BASE.compose(chosen[tgt], phi)
            rhs = _BASE.compose(G.laxity[(sig, x, cs)], _prod_map([chosen[p] for p in ins]))
            if lhs != rhs:
                return
        yield from rec_fn(k + 1)

    yield from rec(0)


def count_free_adjunction(C: FreeAlgebra, sizes: dict, G: SetLaxMorphism) -> tuple[int, int]:
    """``(|Hom(free(sizes), G)|, |Hom(sizes, U G)|)``."""
    FF, _ = free_lax_o(C, sizes)
    left = sum(1 for _ in set_lax_homs(FF, G))
    right = 1
    for key, n in FF.values.items():
        right *= G.values[key] ** sizes.get(key, 0)
    return left, right


def terminal_set_lax(C: FreeAlgebra) -> SetLaxMorphism:
    values = {(j, c): 1 for j in C.cats for c in C.cats[j].objects}
    laxity = {}
    for sig, table in C.action.items():
        for (x, cs), c in table.items():
            laxity[(sig, x, cs)] = FinMap(1, 1, (0,))
    return SetLaxMorphism(C, values, laxity)


def associative_operad(max_arity: int = 3, nullary: bool = False) -> ColoredOperad:
    """One color with a single operation of every arity."""
    c = "*"
    lo = 0 if nullary else 1
    ops = {(tuple([c] * n), c): terminal_category() for n in range(lo, max_arity + 1)}
    return operad_from_rule((c,), ops, {c: "*"}, lambda *args: "*", max_arity)


# ---------------------------------------------------------------------------
# small fixtures


def monoid_category(elements: Sequence, mult: Callable, unit) -> FinCategory:
    """A monoid as a one-object category; ``g o f = mult(g, f)``."""
    elements = list(elements)
    mors = {e: ("*", "*") for e in elements}
    comp = {(g, f): mult(g, f) for g in elements for f in elements}
    return FinCategory(["*"], mors, comp, {"*": unit})


def z2_twocat() -> TwoCategoryData:
    """One object, one 1-morphism, the 2-morphisms form Z/2 under addition."""
    add = lambda a, b: (a + b) % 2
    return monoidal_twocat(monoid_category([0, 1], add, 0), add, "*")


def max_twocat() -> TwoCategoryData:
    """One object; the hom category is ``0 <= 1`` with ``max`` as composition."""
    arrow = poset_category([0, 1], lambda a, b: a <= b)
    return monoidal_twocat(arrow, lambda f, g: (max(f[0], g[0]), max(f[1], g[1])), 0)


def lax_o_from_rule(M: OAlgebra, N: OAlgebra, objects: dict, morphisms: dict,
                    rule: Callable) -> LaxOMorphism:
    """Laxity components ``rule(sig, x, cs)`` on every defined key of ``M``."""
    laxity = {(sig, x, cs): rule(sig, x, cs) for sig, x, cs in _lax_keys(M)}
    return LaxOMorphism(M, N, objects, morphisms, laxity)


# ---------------------------------------------------------------------------
# JSON
#
# Identifiers may be nested tuples; they are written as nested lists and read
# back as tuples, so every structure round-trips exactly.


def _enc(x):
    if isinstance(x, tuple):
        return [_enc(y) for y in x]
    if isinstance(x, (str, int, bool)) or x is None:
        return x
    raise InputError(f"cannot encode identifier {x!r}")


def _dec(x):
    if isinstance(x, list):
        return tuple(_dec(y) for y in x)
    if isinstance(x, (str, int, bool)) or x is None:
        return x
    raise InputError(f"malformed identifier {x!r}")


def category_to_json(c: FinCategory) -> dict:
    return {"objects": [_enc(o) for o in c.objects],
            "morphisms": [{"id": _enc(f), "src": _enc(s), "tgt": _enc(t)} for f, (s, t) in c.morphisms.items()],
            "compose": [[_enc(g), _enc(f), _enc(gf)] for (g, f), gf in c.compose.items()],
            "identities": [[_enc(o), _enc(i)] for o, i in c.identities.items()]}


def category_from_json(d: dict) -> FinCategory:
    try:
        objects = [_dec(o) for o in d["objects"]]
        mors = {_dec(m["id"]): (_dec(m["src"]), _dec(m["tgt"])) for m in d["morphisms"]}
        comp = {(_dec(g), _dec(f)): _dec(gf) for g, f, gf in d["compose"]}
        ids = {_dec(o): _dec(i) for o, i in d["identities"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed category: {exc}") from exc
    return FinCategory(objects, mors, comp, ids)


def operad_to_json(O: ColoredOperad) -> dict:
    return {
        "colors": [_enc(c) for c in O.colors],
        "max_arity": O.max_arity,
        "operations": [{"signature": _enc(sig), "category": category_to_json(c)} for sig, c in O.ops.items()],
        "units": [[_enc(i), _enc(x)] for i, x in O.units.items()],
        "gamma": [{"outer": _enc(outer), "inners": _enc(inners),
                   "table": [[_enc(a), _enc(bs), _enc(m)] for (a, bs), m in table.items()]}
                  for (outer, inners), table in O.gamma.items()],
    }


def operad_from_json(d: dict) -> ColoredOperad:
    try:
        colors = tuple(_dec(c) for c in d["colors"])
        ops = {_dec(e["signature"]): category_from_json(e["category"]) for e in d["operations"]}
        units = {_dec(i): _dec(x) for i, x in d["units"]}
        gamma = {(_dec(e["outer"]), _dec(e["inners"])): {(_dec(a), _dec(bs)): _dec(m) for a, bs, m in e["table"]}
                 for e in d["gamma"]}
        max_arity = int(d["max_arity"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed operad: {exc}") from exc
    return ColoredOperad(colors, ops, units, gamma, max_arity)


def twocat_to_json(T: TwoCategoryData) -> dict:
    return {
        "objects": [_enc(a) for a in T.objects],
        "hom": [{"source": _enc(a), "target": _enc(b), "category": category_to_json(c)}
                for (a, b), c in T.hom.items()],
        "comp": [{"objects": _enc(k), "table": [[_enc(f), _enc(g), _enc(h)] for (f, g), h in tab.items()]}
                 for k, tab in T.comp.items()],
        "units": [[_enc(a), _enc(u)] for a, u in T.units.items()],
    }


def twocat_from_json(d: dict) -> TwoCategoryData:
    try:
        objects = tuple(_dec(a) for a in d["objects"])
        hom = {(_dec(e["source"]), _dec(e["target"])): category_from_json(e["category"]) for e in d["hom"]}
        comp = {_dec(e["objects"]): {(_dec(f), _dec(g)): _dec(h) for f, g, h in e["table"]} for e in d["comp"]}
        units = {_dec(a): _dec(u) for a, u in d["units"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed 2-category: {exc}") from exc
    missing = [(a, b) for a in objects for b in objects if (a, b) not in hom]
    missing += [k for k in itertools.product(objects, repeat=3) if k not in comp]
    missing += [a for a in objects if a not in units]
    if missing:
        raise InputError(f"2-category is missing entries: {missing[:3]}")
    return TwoCategoryData(objects, hom, comp, units)

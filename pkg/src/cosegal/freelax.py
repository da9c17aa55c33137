"""The free lax diagram on a presheaf family and constructions around it.

``gamma(X)(t)`` is the coproduct, over all decompositions ``d`` of ``t``, of
the tensor of ``X`` on the blocks of ``d``; laxity maps are the coproduct
inclusions given by concatenating decompositions.  ``gamma`` is left adjoint
to forgetting laxity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .base import FinMap, FinSetBase
from .errors import ConvergenceError, InputError, PreconditionError
from .laxdiag import (Family, LaxDiagram, Transformation, enumerate_morphisms,
                      identity_transformation, underlying_family)
from .report import Report
from .sx import (Chain, all_chains, binary_cuts, chain_key, chain_maps_between, compose_maps,
                 concat, dec_enumerate, dec_of_map, degree, generator_map,
                 presentation_steps, ternary_cuts)


# ---------------------------------------------------------------------------
# the free diagram


@dataclass(eq=False)
class FreeDiagram(LaxDiagram):
    """A lax diagram ``gamma(X)`` that remembers its summands.

    ``offsets[t][d]`` is the position of the summand tagged by the
    decomposition ``d`` inside ``gamma(X)(t)``.
    """

    generators_family: Family | None = None
    offsets: dict = field(default_factory=dict)

    def summand_size(self, d) -> int:
        return self.base.tensor_objs([self.generators_family.values[b] for b in d])

    def inclusion(self, t: Chain, d) -> FinMap:
        off = self.offsets[t][d]
        n = self.summand_size(d)
        return FinMap(n, self.values[t], tuple(range(off, off + n)))

    def summands(self, t: Chain):
        for d in dec_enumerate(t):
            yield d, self.offsets[t][d], self.summand_size(d)


def _block_product_map(X: Family, maps) -> FinMap:
    return X.base.tensor_maps([X.act(u) for u in maps])


def gamma(X: Family) -> FreeDiagram:
    """Free lax diagram on a family (flat formula, summands tagged)."""
    B = X.base
    values, offsets = {}, {}
    for t in X.chains():
        off, table = 0, {}
        for d in dec_enumerate(t):
            table[d] = off
            off += B.tensor_objs([X.values[b] for b in d])
        values[t], offsets[t] = off, table
    size = lambda d: B.tensor_objs([X.values[b] for b in d])
    actions = {}
    for t in X.chains():
        for i in range(degree(t) - 1):
            w = generator_map(t, i)
            tp = w.target
            arr = [0] * values[tp]
            for dp in dec_enumerate(tp):
                d, blocks = dec_of_map(w, dp)
                inner = _block_product_map(X, blocks)
                o_src, o_tgt = offsets[tp][dp], offsets[t][d]
                for x in range(size(dp)):
                    arr[o_src + x] = o_tgt + inner(x)
            actions[(t, i)] = FinMap(values[tp], values[t], tuple(arr))
    laxity = {}
    for t in X.chains():
        for s, r in binary_cuts(t):
            arr = [0] * (values[s] * values[r])
            for d1 in dec_enumerate(s):
                n1 = size(d1)
                for d2 in dec_enumerate(r):
                    n2 = size(d2)
                    o = offsets[t][d1 + d2]
                    for x in range(n1):
                        for y in range(n2):
                            src = (offsets[s][d1] + x) * values[r] + offsets[r][d2] + y
                            arr[src] = o + x * n2 + y
            laxity[(s, r)] = FinMap(values[s] * values[r], values[t], tuple(arr))
    return FreeDiagram(X.labels, X.max_degree, values, actions, B, laxity,
                       generators_family=X, offsets=offsets)


def gamma_inductive_tags(X: Family, t: Chain) -> list:
    """Elements of the degree-recursive presentation
    ``gamma(t) = X(t) + sum over first cuts (t0, t1) of X(t0) (x) gamma(t1)``,
    listed as ``(decomposition, index)`` pairs in recursive order."""
    B = X.base
    out = [((t,), x) for x in range(X.values[t])]
    for t0, t1 in binary_cuts(t):
        rest = gamma_inductive_tags(X, t1)
        for x0 in range(X.values[t0]):
            for d1, x1 in rest:
                n1 = B.tensor_objs([X.values[b] for b in d1])
                out.append(((t0,) + d1, x0 * n1 + x1))
    return out


def gamma_inductive_iso(X: Family, G: FreeDiagram, t: Chain) -> FinMap:
    """The bijection from the recursive presentation to the flat one at ``t``."""
    tags = gamma_inductive_tags(X, t)
    arr = tuple(G.offsets[t][d] + x for d, x in tags)
    f = FinMap(len(tags), G.values[t], arr)
    if not X.base.is_iso(f):
        raise AssertionError(f"recursive and flat presentations differ at {chain_key(t)}")
    return f


def gamma_nested_size(X: Family, t: Chain, _memo=None) -> int:
    """Size of ``X(t) + sum over nontrivial dec of the tensor of gamma(blocks)``
    read literally, with nested summands counted separately."""
    memo = {} if _memo is None else _memo
    if t in memo:
        return memo[t]
    total = X.values[t]
    for d in dec_enumerate(t)[1:]:
        prod = 1
        for b in d:
            prod *= gamma_nested_size(X, b, memo)
        total += prod
    memo[t] = total
    return total


def eta(X: Family, G: FreeDiagram | None = None) -> Transformation:
    """Unit ``X -> U gamma(X)``: inclusion of the trivial summand."""
    G = G or gamma(X)
    return Transformation(X, underlying_family(G), {t: G.inclusion(t, (t,)) for t in X.chains()})


def gamma_map(delta: Transformation, GA: FreeDiagram | None = None,
              GB: FreeDiagram | None = None) -> Transformation:
    """``gamma`` on a family morphism: summand-wise tensor of components."""
    X, Y = delta.source, delta.target
    GA = GA or gamma(X)
    GB = GB or gamma(Y)
    B = X.base
    comps = {}
    for t in X.chains():
        arr = [0] * GA.values[t]
        for d, off, n in GA.summands(t):
            inner = B.tensor_maps([delta[b] for b in d])
            o2 = GB.offsets[t][d]
            for x in range(n):
                arr[off + x] = o2 + inner(x)
        comps[t] = FinMap(GA.values[t], GB.values[t], tuple(arr))
    return Transformation(GA, GB, comps)


def theta(sigma: Transformation) -> Transformation:
    """``theta(sigma) = U(sigma) o eta``."""
    G = sigma.source
    if not isinstance(G, FreeDiagram):
        raise InputError("theta needs a morphism out of a free diagram")
    B = G.base
    X = G.generators_family
    return Transformation(X, underlying_family(sigma.target),
                          {t: B.compose(sigma[t], G.inclusion(t, (t,))) for t in X.chains()})


def theta_inverse(pi: Transformation, F: LaxDiagram, G: FreeDiagram | None = None) -> Transformation:
    """The unique morphism ``gamma(X) -> F`` restricting to ``pi`` on generators.

    Built degree by degree: on the summand of a decomposition ``(w0..wp)`` it is
    the iterated laxity of ``F`` after the already-built components on the blocks.
    """
    X = pi.source
    G = G or gamma(X)
    B = F.base
    comps: dict = {}
    for t in X.chains():
        arr = [0] * G.values[t]
        for d, off, n in G.summands(t):
            if len(d) == 1:
                part = pi[t]
            else:
                below = [B.compose(comps[b], G.inclusion(b, (b,))) for b in d]
                part = B.compose(F.lax_many(d), B.tensor_maps(below))
            for x in range(n):
                arr[off + x] = part(x)
        comps[t] = FinMap(G.values[t], F.values[t], tuple(arr))
    return Transformation(G, F, comps)


def counit(F: LaxDiagram, G: FreeDiagram | None = None) -> Transformation:
    """``gamma(U F) -> F``: iterated laxity on each summand."""
    G = G or gamma(underlying_family(F))
    comps = {}
    for t in F.chains():
        arr = [0] * G.values[t]
        for d, off, n in G.summands(t):
            part = F.lax_many(d)
            for x in range(n):
                arr[off + x] = part(x)
        comps[t] = FinMap(G.values[t], F.values[t], tuple(arr))
    return Transformation(G, F, comps)


# ---------------------------------------------------------------------------
# the monad T = U gamma


def monad_T(X: Family) -> tuple[Family, FreeDiagram]:
    G = gamma(X)
    return underlying_family(G), G


def monad_mu(X: Family) -> Transformation:
    """``mu_X = U(counit at gamma X): T T X -> T X``."""
    GX = gamma(X)
    return _as_family_map(counit(GX))


def _as_family_map(sigma: Transformation) -> Transformation:
    return Transformation(underlying_family(sigma.source), underlying_family(sigma.target),
                          dict(sigma.components))


def _eq(s1: Transformation, s2: Transformation) -> bool:
    return all(s1[t] == s2[t] for t in s1.source.chains())


def check_monad_laws(X: Family, finitary_steps: int = 3, rng=None) -> Report:
    """Associativity and unit laws of ``T = U gamma`` (exact), plus a
    directed-colimit smoke test on a chain of injections."""
    rep = Report()
    TX, GX = monad_T(X)
    TTX, GTX = monad_T(TX)
    mu = _as_family_map(counit(GX, GTX))
    mu_T = _as_family_map(counit(GTX))
    T_mu = _as_family_map(gamma_map(mu))
    if not _eq(mu.compose_after(T_mu), mu.compose_after(mu_T)):
        rep.add("monad-associativity")
    eta_T = eta(TX, GTX)
    T_eta = _as_family_map(gamma_map(eta(X, GX), gamma(X), GTX))
    ident = identity_transformation(TX)
    if not _eq(mu.compose_after(eta_T), ident):
        rep.add("monad-left-unit")
    if not _eq(mu.compose_after(T_eta), ident):
        rep.add("monad-right-unit")
    if finitary_steps:
        res = finitary_smoke_test(X, finitary_steps)
        if not res:
            rep.add("finitary", detail="T of the colimit differs from the colimit of T")
    return rep


def family_coproduct(F: Family, G: Family) -> Family:
    """Level-wise coproduct ``F + G`` (elements of ``F`` first)."""
    B = F.base
    values = {t: F.values[t] + G.values[t] for t in F.chains()}
    actions = {}
    for t, i in F.generators():
        f, g = F.actions[(t, i)], G.actions[(t, i)]
        actions[(t, i)] = FinMap(f.src + g.src, f.tgt + g.tgt,
                                 f.map + tuple(f.tgt + y for y in g.map))
    return Family(F.labels, F.max_degree, values, actions, B)


def directed_system(X: Family, steps: int) -> list[Family]:
    """``X, X + X, X + X + X, ...`` with the inclusions of the first summands."""
    out = [X]
    for _ in range(steps):
        out.append(family_coproduct(out[-1], X))
    return out


def inclusion_between(F: Family, G: Family) -> Transformation:
    """The evident injection when ``G`` extends ``F`` by new elements at the end."""
    return Transformation(F, G, {t: FinMap(F.values[t], G.values[t], tuple(range(F.values[t])))
                                 for t in F.chains()})


def family_colimit(families: Sequence[Family], arrows: Sequence[tuple]) -> tuple[Family, list]:
    """Level-wise colimit of a finite diagram of families; arrows are
    ``(i, j, Transformation)``.  Returns the colimit and its legs."""
    F0 = families[0]
    B = F0.base
    cols: dict = {}
    for t in F0.chains():
        cols[t] = B.colimit([F.values[t] for F in families],
                            [(i, j, s[t]) for i, j, s in arrows])
    values = {t: c.obj for t, c in cols.items()}
    actions = {}
    for t in F0.chains():
        for i in range(degree(t) - 1):
            tp = generator_map(t, i).target
            legs = [B.compose(cols[t].legs[k], F.actions[(t, i)]) for k, F in enumerate(families)]
            actions[(t, i)] = cols[tp].mediate_to(values[t], legs)
    colim = Family(F0.labels, F0.max_degree, values, actions, B)
    legs = [Transformation(F, colim, {t: cols[t].legs[k] for t in F0.chains()})
            for k, F in enumerate(families)]
    return colim, legs


@dataclass
class FinitaryResult:
    ok: bool
    sizes_colim_of_T: dict
    sizes_T_of_colim: dict

    def __bool__(self):
        return self.ok


def finitary_smoke_test(X: Family, steps: int = 3) -> FinitaryResult:
    """Compare ``T(colim X_i)`` with ``colim T(X_i)`` on a chain of injections."""
    system = directed_system(X, steps)
    arrows = [(k, k + 1, inclusion_between(system[k], system[k + 1])) for k in range(steps)]
    colim, legs = family_colimit(system, arrows)
    TX = [monad_T(F) for F in system]
    T_arrows = [(i, j, _as_family_map(gamma_map(s, TX[i][1], TX[j][1]))) for i, j, s in arrows]
    colim_T, _ = family_colimit([t[0] for t in TX], T_arrows)
    T_colim, G_colim = monad_T(colim)
    # the canonical comparison colim T(X_i) -> T(colim X_i)
    B = X.base
    ok = True
    for t in X.chains():
        cones = [_as_family_map(gamma_map(legs[k], TX[k][1], G_colim))[t] for k in range(len(system))]
        col = B.colimit([F.values[t] for F, _ in TX], [(i, j, s[t]) for i, j, s in T_arrows])
        cmp = col.mediate_to(T_colim.values[t], cones)
        ok = ok and B.is_iso(cmp)
    return FinitaryResult(ok, {chain_key(t): v for t, v in colim_T.values.items()},
                          {chain_key(t): v for t, v in T_colim.values.items()})


# ---------------------------------------------------------------------------
# split coequalizers


def coequalizer_split(s1: Transformation, s2: Transformation, p: Transformation
                      ) -> tuple[LaxDiagram, Transformation]:
    """Coequalizer of a pair ``D => F`` of lax morphisms split by ``p: U F -> U D``.

    Computed level-wise; the laxity of the quotient is the unique map
    ``psi`` with ``psi o (L (x) L) = L o phi``.
    """
    F = s1.target
    B = F.base
    for t in F.chains():
        idF = B.identity(F.values[t])
        if B.compose(s1[t], p[t]) != idF or B.compose(s2[t], p[t]) != idF:
            raise PreconditionError(f"pair is not split at {chain_key(t)}")
    cols = {t: B.coequalizer(s1[t], s2[t]) for t in F.chains()}
    L = {t: c.legs[1] for t, c in cols.items()}
    values = {t: c.obj for t, c in cols.items()}
    actions = {}
    for t, i in F.generators():
        tp = generator_map(t, i).target
        f = B.factor_through_epi(L[tp], B.compose(L[t], F.actions[(t, i)]))
        if f is None:  # pragma: no cover - excluded by the split equations
            raise AssertionError("action does not descend to the coequalizer")
        actions[(t, i)] = f
    laxity = {}
    for s, r in F.laxity_pairs():
        f = B.factor_through_epi(B.tensor_map(L[s], L[r]), B.compose(L[concat(s, r)], F.laxity[(s, r)]))
        if f is None:  # pragma: no cover
            raise AssertionError(f"laxity does not descend at {chain_key(s)}|{chain_key(r)}")
        laxity[(s, r)] = f
    E = LaxDiagram(F.labels, F.max_degree, values, actions, B, laxity)
    return E, Transformation(F, E, L)


def is_precongruence_congruence(s1: Transformation, s2: Transformation) -> bool:
    """Does the level-wise kernel relation generated by the pair respect laxity?

    True iff laxity descends to the level-wise coequalizer."""
    F = s1.target
    B = F.base
    L = {t: B.coequalizer(s1[t], s2[t]).legs[1] for t in F.chains()}
    for s, r in F.laxity_pairs():
        if B.factor_through_epi(B.tensor_map(L[s], L[r]), B.compose(L[concat(s, r)], F.laxity[(s, r)])) is None:
            return False
    for t, i in F.generators():
        tp = generator_map(t, i).target
        if B.factor_through_epi(L[tp], B.compose(L[t], F.actions[(t, i)])) is None:
            return False
    return True


# ---------------------------------------------------------------------------
# pushouts along free maps


@dataclass
class PushoutResult:
    diagram: LaxDiagram
    H: Transformation        # F -> G
    K: Transformation        # gamma(B) -> G
    sweeps: int


def _act_partial(base: FinSetBase, values: dict, actions: dict, u) -> FinMap:
    out = base.identity(values[u.source])
    for t, i in presentation_steps(u):
        out = base.compose(out, actions[(t, i)])
    return out


def laxity_sweep(E: Family, sources: Sequence[tuple[LaxDiagram, Transformation]]
                 ) -> tuple[LaxDiagram, Transformation]:
    """Freely add laxity to a family, degree by degree.

    ``sources`` are lax diagrams with family maps into ``E`` whose laxity must
    be respected.  At a chain ``t`` the candidates are ``E(t)`` plus one
    product ``G(s) (x) G(s')`` per binary cut; they are identified along the
    source laxities, the associativity of the new laxity, and the lower-degree
    identifications transported by the actions.
    """
    B = E.base
    values, actions, laxity = {}, {}, {}
    q: dict = {}            # t -> raw(t) -> G(t)
    H: dict = {}            # t -> E(t) -> G(t)
    for t in E.chains():
        cuts = binary_cuts(t)
        pieces = [("E",)] + [("cut", s, r) for s, r in cuts]
        sizes = [E.values[t]] + [values[s] * values[r] for s, r in cuts]
        co = B.coproduct(sizes)
        inj = {pc: co.legs[k] for k, pc in enumerate(pieces)}
        raw = co.obj
        rel_objs, rel_arrows = [], []

        def relate(a: FinMap, b: FinMap):
            k = len(rel_objs) + 1
            rel_objs.append(a.src)
            rel_arrows.append((k, 0, a))
            rel_arrows.append((k, 0, b))

        def transport(i):
            # raw(t') -> raw(t) along the generator at position i
            w = generator_map(t, i)
            tp = w.target
            parts = [B.compose(inj[("E",)], E.actions[(t, i)])]
            for s1, s2 in binary_cuts(tp):
                (r1, r2), (w1, w2) = dec_of_map(w, (s1, s2))
                m = B.tensor_map(_act_partial(B, values, actions, w1), _act_partial(B, values, actions, w2))
                parts.append(B.compose(inj[("cut", r1, r2)], m))
            return tp, B.coproduct([p.src for p in parts]).mediate_to(raw, parts)

        # transport lower identifications along generator actions
        for i in range(degree(t) - 1):
            tp, rho = transport(i)
            n, k1, k2 = B.kernel_pair(q[tp])
            relate(B.compose(rho, k1), B.compose(rho, k2))
        # source laxities
        for D, f in sources:
            for s, r in cuts:
                a = B.compose(inj[("E",)], B.compose(f[t], D.laxity[(s, r)]))
                b = B.compose(inj[("cut", s, r)], B.tensor_map(B.compose(H[s], f[s]), B.compose(H[r], f[r])))
                relate(a, b)
        # associativity of the new laxity
        for r1, r2, r3 in ternary_cuts(t):
            r12, r23 = concat(r1, r2), concat(r2, r3)
            a = B.compose(inj[("cut", r12, r3)], B.tensor_map(laxity[(r1, r2)], B.identity(values[r3])))
            b = B.compose(inj[("cut", r1, r23)], B.tensor_map(B.identity(values[r1]), laxity[(r2, r3)]))
            relate(a, b)
        col = B.colimit([raw] + rel_objs, rel_arrows)
        qt = col.legs[0]
        values[t], q[t] = col.obj, qt
        H[t] = B.compose(qt, inj[("E",)])
        for s, r in cuts:
            laxity[(s, r)] = B.compose(qt, inj[("cut", s, r)])
        for i in range(degree(t) - 1):
            tp, rho = transport(i)
            g = B.factor_through_epi(q[tp], B.compose(qt, rho))
            if g is None:  # pragma: no cover - excluded by the transported relations
                raise AssertionError(f"action does not descend at {chain_key(t)}/{i}")
            actions[(t, i)] = g
    G = LaxDiagram(E.labels, E.max_degree, values, actions, B, laxity)
    return G, Transformation(E, underlying_family(G), H)


def pushout_free(alpha: Transformation, sigma: Transformation, cap: int | None = None,
                 GA: FreeDiagram | None = None, GB: FreeDiagram | None = None) -> PushoutResult:
    """Pushout of ``gamma(alpha): gamma(A) -> gamma(B)`` along ``sigma: gamma(A) -> F``.

    Starts from the level-wise pushout and runs laxity sweeps until a sweep
    changes nothing, with at most ``cap`` (default ``2N``) sweeps.
    """
    F = sigma.target
    Bs = F.base
    GA = GA or (sigma.source if isinstance(sigma.source, FreeDiagram) else gamma(alpha.source))
    GB = GB or gamma(alpha.target)
    ga = gamma_map(alpha, GA, GB)
    cap = 2 * F.max_degree if cap is None else cap
    cols = {t: Bs.pushout(sigma[t], ga[t]) for t in F.chains()}
    values = {t: c.obj for t, c in cols.items()}
    acts = {}
    for t, i in F.generators():
        tp = generator_map(t, i).target
        c = cols[t]
        legs = [B_ for B_ in (
            Bs.compose_all(c.legs[1], F.actions[(t, i)], sigma[tp]),
            Bs.compose(c.legs[1], F.actions[(t, i)]),
            Bs.compose(c.legs[2], GB.actions[(t, i)]),
        )]
        acts[(t, i)] = cols[tp].mediate_to(values[t], legs)
    E = Family(F.labels, F.max_degree, values, acts, Bs)
    p = Transformation(F, E, {t: c.legs[1] for t, c in cols.items()})
    pB = Transformation(GB, E, {t: c.legs[2] for t, c in cols.items()})
    G, Q = laxity_sweep(E, [(F, p), (GB, pB)])
    H = {t: Bs.compose(Q[t], p[t]) for t in F.chains()}
    K = {t: Bs.compose(Q[t], pB[t]) for t in F.chains()}
    sweeps = 1
    while True:
        G2, Q2 = laxity_sweep(underlying_family(G), [(G, identity_transformation(underlying_family(G)))])
        if all(Bs.is_iso(Q2[t]) for t in F.chains()):
            break
        sweeps += 1
        if sweeps > cap:
            raise ConvergenceError(f"pushout did not stabilize within {cap} sweeps")
        H = {t: Bs.compose(Q2[t], H[t]) for t in F.chains()}
        K = {t: Bs.compose(Q2[t], K[t]) for t in F.chains()}
        G = G2
    return PushoutResult(G, Transformation(F, G, H), Transformation(GB, G, K), sweeps)


def pushout_mediators(res: PushoutResult, sigma: Transformation, alpha_free: Transformation,
                      K: LaxDiagram, max_cocones: int | None = None) -> Report:
    """Mediator search for the pushout property against a test diagram ``K``."""
    rep = Report()
    F, GB = sigma.target, alpha_free.target
    B = F.base
    seen = 0
    for x in enumerate_morphisms(F, K):
        for y in enumerate_morphisms(GB, K):
            if any(B.compose(x[t], sigma[t]) != B.compose(y[t], alpha_free[t]) for t in F.chains()):
                continue
            seen += 1
            rep.checked = seen
            X_ = Transformation(F, K, x)
            Y_ = Transformation(GB, K, y)
            n = sum(1 for _ in enumerate_morphisms(res.diagram, K, constraints=[(res.H, X_), (res.K, Y_)]))
            if n != 1:
                rep.add("mediator-count", n)
                return rep
            if max_cocones is not None and seen >= max_cocones:
                return rep
    return rep


# ---------------------------------------------------------------------------
# Dirac families and representables


def dirac_family(labels, max_degree: int, at: Chain, size: int, base: FinSetBase | None = None) -> Family:
    """The free presheaf on ``size`` elements at the chain ``at``:
    ``c -> (chain maps c -> at) x size``, zero over other endpoint pairs."""
    from .laxdiag import _BASE
    B = base or _BASE
    chains = all_chains(labels, max_degree)
    homs = {c: chain_maps_between(c, at) if (c[0], c[-1]) == (at[0], at[-1]) else [] for c in chains}
    index = {c: {u: k for k, u in enumerate(h)} for c, h in homs.items()}
    values = {c: len(h) * size for c, h in homs.items()}
    actions = {}
    for c in chains:
        for i in range(degree(c) - 1):
            w = generator_map(c, i)
            cp = w.target
            arr = []
            for g in homs[cp]:
                k = index[c][compose_maps(g, w)]
                arr.extend(k * size + b for b in range(size))
            actions[(c, i)] = FinMap(values[cp], values[c], tuple(arr))
    return Family(tuple(labels), max_degree, values, actions, B)


def representable(n: int, size: int, max_degree: int) -> FreeDiagram:
    """``gamma`` of the Dirac family at the chain ``(0, 1, ..., n)``."""
    if not 1 <= n <= max_degree:
        raise InputError("representable needs 1 <= n <= max_degree")
    labels = tuple(str(k) for k in range(n + 1))
    return gamma(dirac_family(labels, max_degree, labels, size))


def degree_one_family(labels, max_degree: int, sizes: dict, base: FinSetBase | None = None) -> Family:
    """The family generated by ``sizes[(a, b)]`` elements on each degree-1 chain:
    every chain gets the value of its endpoint pair, with identity actions."""
    from .laxdiag import _BASE
    B = base or _BASE
    chains = all_chains(labels, max_degree)
    values = {c: sizes.get((c[0], c[-1]), 0) for c in chains}
    actions = {(c, i): B.identity(values[c]) for c in chains for i in range(degree(c) - 1)}
    return Family(tuple(labels), max_degree, values, actions, B)

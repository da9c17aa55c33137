"""Co-Segalification in a decidable model instance.

For a chain ``t`` from ``A`` to ``B`` the evaluation ``F -> F(u_t)`` at the
canonical map ``u_t: t -> (A, B)`` has a left adjoint ``pr_shriek``.  Gluing
along ``pr_shriek`` of the tautological square ``h -> id_V`` (where
``F(u_t) = j o h``) moves ``F(u_t)`` towards a trivial fibration.  Iterating
per chain and then globally gives a diagram satisfying the Co-Segal
conditions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .base import FinMap, FinSetBase, ModelData
from .errors import ConvergenceError, InputError
from .freelax import FreeDiagram, gamma, pushout_free, theta_inverse
from .laxdiag import (Family, LaxDiagram, Transformation, _BASE, count_morphisms,
                      diagram_to_semicat, identity_transformation, underlying_family)
from .reedy_skel import colimit_laxg
from .sx import (Chain, all_chains, canonical_map_u_t, chain_key, chain_maps_between,
                 compose_maps, degree, generator_map)


@dataclass(frozen=True)
class ArrowObject:
    """A base map ``h: U -> V`` seen as an object of the arrow category."""

    h: FinMap

    @property
    def U(self) -> int:
        return self.h.src

    @property
    def V(self) -> int:
        return self.h.tgt


@dataclass(frozen=True)
class ArrowSquare:
    """A morphism ``(top, bottom): a -> b`` of arrows, ``b.h o top = bottom o a.h``."""

    source: ArrowObject
    target: ArrowObject
    top: FinMap
    bottom: FinMap

    def commutes(self, base: FinSetBase = _BASE) -> bool:
        return base.compose(self.target.h, self.top) == base.compose(self.bottom, self.source.h)


def h_over(a: ArrowObject, base: FinSetBase = _BASE) -> ArrowSquare:
    """The tautological square ``h -> id_V`` with verticals ``h`` and ``id_V``."""
    return ArrowSquare(a, ArrowObject(base.identity(a.V)), a.h, base.identity(a.V))


def square_has_lift(i: FinMap, p: FinMap, top: FinMap, bottom: FinMap, base: FinSetBase = _BASE) -> bool:
    """Whether the square ``p o top = bottom o i`` has a diagonal filler."""
    return any(base.compose(l, i) == top and base.compose(p, l) == bottom
               for l in base.hom(i.tgt, p.src))


def horn_fills(i: FinMap, p: FinMap, top: FinMap, bottom: FinMap, base: FinSetBase = _BASE) -> bool:
    """The same lifting problem routed through ``i_/V``: a map out of the
    target of ``i -> id`` restricting to ``(top, bottom)`` on the source."""
    sq = h_over(ArrowObject(i), base)
    # a morphism id_V -> p in the arrow category is (l, bottom) with p o l = bottom;
    # restricting along the square gives (l o i, bottom)
    return any(base.compose(p, l) == bottom and base.compose(l, sq.top) == top
               for l in base.hom(sq.target.U, p.src))


# ---------------------------------------------------------------------------
# the left adjoint of evaluation at u_t


@dataclass
class KanFamily(Family):
    """``Lan`` of an arrow along ``u_t``, with the colimit legs used to build it."""

    chain: Chain = ()
    arrow: ArrowObject | None = None
    legs: dict = field(default_factory=dict)   # c -> (U-leg, {g: V-leg})


def _kan_value(B: FinSetBase, a: ArrowObject, maps: list):
    if not maps:
        col = B.colimit([a.U], [])
        return col.obj, col.legs[0], {}
    col = B.colimit([a.U] + [a.V] * len(maps), [(0, k + 1, a.h) for k in range(len(maps))])
    return col.obj, col.legs[0], {g: col.legs[k + 1] for k, g in enumerate(maps)}


def kan_extension(t: Chain, a: ArrowObject, labels, max_degree: int,
                  base: FinSetBase = _BASE) -> KanFamily:
    """The family ``c -> U``, or ``U`` with one copy of ``V`` per chain map
    ``c -> t`` glued along ``h``; zero over other endpoints."""
    if degree(t) < 2:
        raise InputError("evaluation at u_t needs a chain of degree at least 2")
    B = base
    values, actions, legs = {}, {}, {}
    chains = all_chains(labels, max_degree)
    for c in chains:
        if (c[0], c[-1]) != (t[0], t[-1]):
            values[c] = 0
            continue
        n, uleg, vlegs = _kan_value(B, a, chain_maps_between(c, t) if degree(c) >= degree(t) else [])
        values[c] = n
        legs[c] = (uleg, vlegs)
    for c in chains:
        for i in range(degree(c) - 1):
            w = generator_map(c, i)
            cp = w.target
            if c not in legs:
                actions[(c, i)] = B.empty_map(0)
                continue
            uleg, vlegs = legs[cp]
            parts = [legs[c][0]] + [legs[c][1][compose_maps(g, w)] for g in vlegs]
            col_src = [a.U] + [a.V] * len(vlegs)
            arrows = [(0, k + 1, a.h) for k in range(len(vlegs))]
            actions[(c, i)] = B.colimit(col_src, arrows).mediate_to(values[c], parts)
    return KanFamily(tuple(labels), max_degree, values, actions, B, chain=t, arrow=a, legs=legs)


def kan_map(sq: ArrowSquare, L1: KanFamily, L2: KanFamily) -> Transformation:
    """``Lan`` on a square: ``top`` on the ``U`` part, ``bottom`` on each copy."""
    B = L1.base
    comps = {}
    for c in L1.chains():
        if c not in L1.legs:
            comps[c] = B.empty_map(0)
            continue
        u1, v1 = L1.legs[c]
        u2, v2 = L2.legs[c]
        src = [L1.arrow.U] + [L1.arrow.V] * len(v1)
        arrows = [(0, k + 1, L1.arrow.h) for k in range(len(v1))]
        parts = [B.compose(u2, sq.top)] + [B.compose(v2[g], sq.bottom) for g in v1]
        comps[c] = B.colimit(src, arrows).mediate_to(L2.values[c], parts)
    return Transformation(L1, L2, comps)


def kan_transpose(L: KanFamily, F: Family, sq: ArrowSquare) -> Transformation:
    """Family map ``Lan(a) -> F`` for a square ``a -> F(u_t)``."""
    B = F.base
    comps = {}
    for c in L.chains():
        if c not in L.legs:
            comps[c] = B.empty_map(F.values[c])
            continue
        uleg, vlegs = L.legs[c]
        src = [L.arrow.U] + [L.arrow.V] * len(vlegs)
        arrows = [(0, k + 1, L.arrow.h) for k in range(len(vlegs))]
        parts = [B.compose(F.act(canonical_map_u_t(c)) if degree(c) > 1 else B.identity(F.values[c]), sq.top)]
        parts += [B.compose(F.act(g), sq.bottom) for g in vlegs]
        comps[c] = B.colimit(src, arrows).mediate_to(F.values[c], parts)
    return Transformation(L, F, comps)


def pr_shriek(t: Chain, a: ArrowObject, labels, max_degree: int) -> FreeDiagram:
    """Left adjoint to ``F -> F(u_t)``: the free lax diagram on ``kan_extension``."""
    return gamma(kan_extension(t, a, labels, max_degree))


def three_part_formula(t: Chain, a: ArrowObject, c: Chain) -> int:
    """Size given by summing a ``V`` copy for the map out of the endpoint
    chain when it factors, a ``U`` copy when it does not, and a ``V`` copy per
    map ``c -> t``.  Kept for comparison with ``kan_extension``."""
    if (c[0], c[-1]) != (t[0], t[-1]):
        return 0
    k = len(chain_maps_between(c, t)) if degree(c) >= degree(t) else 0
    return (a.V if k else a.U) + k * a.V


def evaluation_squares(a: ArrowObject, F: Family, t: Chain) -> list[ArrowSquare]:
    """All squares ``a -> F(u_t)``."""
    B = F.base
    p = ArrowObject(F.act(canonical_map_u_t(t)))
    out = []
    for top in B.hom(a.U, p.U):
        for bottom in B.hom(a.V, p.V):
            sq = ArrowSquare(a, p, top, bottom)
            if sq.commutes(B):
                out.append(sq)
    return out


def count_pr_adjunction(t: Chain, a: ArrowObject, F: LaxDiagram) -> tuple[int, int]:
    """``(|Hom(pr_shriek a, F)|, |Hom(a, F(u_t))|)``."""
    P = pr_shriek(t, a, F.labels, F.max_degree)
    return count_morphisms(P, F), len(evaluation_squares(a, F, t))


# ---------------------------------------------------------------------------
# gluing


@dataclass
class GlueStage:
    chain: Chain
    factor_sizes: tuple     # (|U|, |V|, |F(t)|)
    sweeps: int
    rlp_before: bool
    rlp_after: bool
    sizes: dict

    def to_json(self) -> dict:
        return {"chain": chain_key(self.chain), "U": self.factor_sizes[0], "V": self.factor_sizes[1],
                "Ft": self.factor_sizes[2], "sweeps": self.sweeps, "rlp_before": self.rlp_before,
                "rlp_after": self.rlp_after,
                "sizes": {chain_key(c): n for c, n in self.sizes.items()}}


@dataclass
class CosegalifyTrace:
    stages: list = field(default_factory=list)
    iterations: int = 0
    converged: bool = False

    def to_json(self) -> dict:
        return {"iterations": self.iterations, "converged": self.converged,
                "stages": [s.to_json() for s in self.stages]}


def _u_t_map(F: Family, t: Chain) -> FinMap:
    return F.act(canonical_map_u_t(t))


def glue_local(F: LaxDiagram, t: Chain, md: ModelData) -> tuple[LaxDiagram, Transformation, GlueStage]:
    """One gluing step at ``t``: push out ``pr_shriek(h -> id_V)`` along the
    transpose of ``(id_U, j): h -> F(u_t)``."""
    if degree(t) < 2:
        raise InputError("gluing needs a chain of degree at least 2")
    B = F.base
    f = _u_t_map(F, t)
    h, j = md.factor_cof_trivfib(f)
    if B.compose(j, h) != f or not md.is_cof(h) or not md.is_trivial_fibration(j):
        raise InputError("factorization oracle returned an invalid factorization")
    a = ArrowObject(h)
    sq = h_over(a, B)
    Lh = kan_extension(t, a, F.labels, F.max_degree, B)
    Lid = kan_extension(t, sq.target, F.labels, F.max_degree, B)
    alpha = kan_map(sq, Lh, Lid)
    tr = kan_transpose(Lh, underlying_family(F), ArrowSquare(a, ArrowObject(f), B.identity(a.U), j))
    GA = gamma(Lh)
    sigma = theta_inverse(tr, F, GA)
    res = pushout_free(alpha, sigma, GA=GA, GB=gamma(Lid))
    S = res.diagram
    AB = (t[0], t[-1])
    k = B.compose(res.K[AB], res.K.source.inclusion(AB, (AB,)))
    if B.compose(k, h) != res.H[AB]:  # pragma: no cover - pushout square
        raise AssertionError("glued map at the endpoint chain does not factor through h")
    stage = GlueStage(t, (f.src, h.tgt, f.tgt), res.sweeps, md.has_rlp(f),
                      md.has_rlp(_u_t_map(S, t)), dict(S.values))
    return S, res.H, stage


# gluing stops with a convergence error once a value exceeds this size
SIZE_LIMIT = 1000


def s_t_infinity(F: LaxDiagram, t: Chain, md: ModelData, cap: int | None = None,
                 size_limit: int = SIZE_LIMIT) -> tuple[LaxDiagram, Transformation, CosegalifyTrace]:
    """Glue at ``t`` until ``F(u_t)`` has the right lifting property."""
    cap = 4 * F.max_degree if cap is None else cap
    trace = CosegalifyTrace()
    eta = identity_transformation(F)
    cur = F
    while not md.has_rlp(_u_t_map(cur, t)):
        if trace.iterations >= cap:
            raise ConvergenceError(f"gluing at {chain_key(t)} did not converge in {cap} steps", trace)
        big = max(cur.values.values(), default=0)
        if big > size_limit:
            raise ConvergenceError(f"gluing at {chain_key(t)} diverges: a value reached {big} "
                                   f"> {size_limit} after {trace.iterations} steps", trace)
        cur, H, stage = glue_local(cur, t, md)
        eta = Transformation(F, cur, {c: F.base.compose(H[c], eta[c]) for c in F.chains()})
        trace.stages.append(stage)
        trace.iterations += 1
    trace.converged = True
    return cur, eta, trace


@dataclass
class GlobalTrace:
    rounds: list = field(default_factory=list)   # per round: failing chains and local traces
    converged: bool = False

    def to_json(self) -> dict:
        return {"converged": self.converged,
                "rounds": [{"failing": [chain_key(t) for t in r["failing"]],
                            "local": [tr.to_json() for tr in r["local"]],
                            "sizes": {chain_key(c): n for c, n in r["sizes"].items()}}
                           for r in self.rounds]}


def _failing_chains(F: LaxDiagram, md: ModelData) -> list[Chain]:
    return [t for t in F.chains() if degree(t) >= 2 and not md.is_weq(_u_t_map(F, t))]


def cosegalify_global(F: LaxDiagram, md: ModelData | None = None, cap: int | None = None,
                      size_limit: int = SIZE_LIMIT) -> tuple[LaxDiagram, Transformation, GlobalTrace]:
    """Cone colimit of the local maps ``eta_t``, repeated until Co-Segal.

    Chains already satisfying the condition contribute identity legs, which do
    not change the cone colimit, so only failing chains are glued.
    """
    md = md or ModelData(F.base)
    cap = 4 * F.max_degree if cap is None else cap
    B = F.base
    trace = GlobalTrace()
    cur = F
    eta = identity_transformation(F)
    while True:
        failing = _failing_chains(cur, md)
        if not failing:
            break
        if len(trace.rounds) >= cap:
            raise ConvergenceError(f"Co-Segalification did not converge in {cap} rounds", trace)
        locals_, targets, legs = [], [], []
        for t in failing:
            try:
                S, e, tr = s_t_infinity(cur, t, md, cap, size_limit)
            except ConvergenceError as exc:
                trace.rounds.append({"failing": failing, "local": locals_ + [exc.trace],
                                     "sizes": dict(cur.values)})
                raise ConvergenceError(str(exc), trace) from exc
            locals_.append(tr)
            targets.append(S)
            legs.append(e)
        col = colimit_laxg([cur] + targets, [(0, k + 1, e) for k, e in enumerate(legs)])
        step = col.legs[0]
        nxt = col.diagram
        eta = Transformation(F, nxt, {c: B.compose(step[c], eta[c]) for c in F.chains()})
        trace.rounds.append({"failing": failing, "local": locals_, "sizes": dict(nxt.values)})
        cur = nxt
    trace.converged = True
    return cur, eta, trace


# ---------------------------------------------------------------------------
# comparison with the word construction


def word_counts(X: Family) -> dict | None:
    """Number of nonempty composable words of degree-1 generators between each
    pair of labels, or ``None`` when cycles make some count infinite."""
    labels = X.labels
    counts = {(a, b): X.values[(a, b)] for a in labels for b in labels}
    total = dict(counts)
    layer = dict(counts)
    for _ in range(len(labels)):
        layer = {(a, c): sum(layer[(a, b)] * counts[(b, c)] for b in labels)
                 for a in labels for c in labels}
        for k, n in layer.items():
            total[k] += n
    if any(layer.values()):
        return None
    return total


def compare_with_words(X: Family, md: ModelData | None = None, cap: int | None = None) -> dict:
    """Hom sizes of the strictification of ``S(gamma X)`` against word counts."""
    S, _, _ = cosegalify_global(gamma(X), md, cap)
    C = diagram_to_semicat(S)
    W = word_counts(X)
    out = {"strictified": {f"{a}.{b}": n for (a, b), n in sorted(C.hom.items())}}
    out["words"] = None if W is None else {f"{a}.{b}": n for (a, b), n in sorted(W.items())}
    out["equal_sizes"] = W is not None and all(C.hom[k] == W[k] for k in W)
    return out

"""Random families, lax diagrams and morphisms for property tests.

Both generators work degree by degree over the direct category of chains:
at each chain a value is chosen together with an arbitrary map out of the
(lax-)latching object, which is exactly the freedom a diagram has.
"""

from __future__ import annotations

import random
from typing import Callable

from .base import FinMap
from .errors import InputError
from .laxdiag import (Family, LaxDiagram, Transformation, _BASE, forced_values)
from .reedy_skel import laxlatch
from .sx import (Chain, LatchObject, all_chains, binary_cuts, classical_latching, degree,
                 generator_map, identity_map, presentation_steps)


def increasing_support(labels) -> Callable[[Chain], bool]:
    """Chains whose first label comes strictly before the last one."""
    order = {x: k for k, x in enumerate(labels)}
    return lambda t: order[t[0]] < order[t[-1]]


def all_support(labels) -> Callable[[Chain], bool]:
    return lambda t: True


def _random_map(rng: random.Random, n: int, m: int) -> FinMap:
    return FinMap(n, m, tuple(rng.randrange(m) for _ in range(n)))


def _pick_size(rng, lower: int, max_size: int, allowed: bool) -> int | None:
    if not allowed:
        return 0 if lower == 0 else None
    lo = 1 if lower > 0 else 0
    return rng.randint(lo, max(lo, max_size))


def random_family(labels, max_degree: int, rng: random.Random, max_size: int = 2,
                  support: Callable[[Chain], bool] | None = None) -> Family:
    """A random presheaf family, supported on ``support``."""
    B = _BASE
    support = support or increasing_support(labels)
    values, actions = {}, {}
    for z in all_chains(labels, max_degree):
        objs, mors = classical_latching(z)
        sizes = [values[u.target] for u in objs]
        arrows = []
        for i, j, w in mors:
            # object i is u: z -> c, object j is w o u; F(w): F(c') -> F(c)
            arrows.append((j, i, _act_partial(values, actions, w)))
        col = B.colimit(sizes, arrows)
        n = _pick_size(rng, col.obj, max_size, support(z))
        if n is None:
            raise InputError("support is not closed under the structure maps")
        values[z] = n
        latch_map = _random_map(rng, col.obj, n) if col.obj else B.empty_map(n)
        index = {u: k for k, u in enumerate(objs)}
        for i in range(degree(z) - 1):
            w = generator_map(z, i)
            actions[(z, i)] = B.compose(latch_map, col.legs[index[w]])
    return Family(tuple(labels), max_degree, values, actions, B)


def _act_partial(values, actions, u) -> FinMap:
    out = _BASE.identity(values[u.source])
    for t, i in presentation_steps(u):
        out = _BASE.compose(out, actions[(t, i)])
    return out


def random_lax_diagram(labels, max_degree: int, rng: random.Random, max_size: int = 2,
                       support: Callable[[Chain], bool] | None = None) -> LaxDiagram:
    """A random lax diagram: at each chain, any map out of the lax-latching object."""
    B = _BASE
    support = support or increasing_support(labels)
    labels = tuple(labels)
    values, actions, laxity = {}, {}, {}
    for d in range(1, max_degree + 1):
        low = LaxDiagram(labels, d - 1, dict(values), dict(actions), B, dict(laxity))
        for z in all_chains(labels, d):
            if degree(z) != d:
                continue
            if d == 1:
                values[z] = _pick_size(rng, 0, max_size, support(z))
                continue
            L = laxlatch(low, z)
            n = _pick_size(rng, L.obj, max_size, support(z))
            if n is None:
                raise InputError("support is not closed under the structure maps")
            values[z] = n
            m = _random_map(rng, L.obj, n) if L.obj else B.empty_map(n)
            for i in range(d - 1):
                w = generator_map(z, i)
                actions[(z, i)] = B.compose(m, L.leg(LatchObject((w.target,), w)))
            for s, r in binary_cuts(z):
                laxity[(s, r)] = B.compose(m, L.leg(LatchObject((s, r), identity_map(z))))
    return LaxDiagram(labels, max_degree, values, actions, B, laxity)


def random_morphism(F: Family, G: Family, rng: random.Random, laxity: bool = True,
                    tries: int = 50) -> Transformation | None:
    """A random morphism ``F -> G``, or ``None`` if none was found."""
    use_lax = laxity and F.is_lax() and G.is_lax()
    chains = F.chains()
    for _ in range(tries):
        chosen: dict = {}
        for t in chains:
            forced = forced_values(F, G, chosen, t, use_lax)
            n, m = F.values[t], G.values[t]
            if forced is None or (m == 0 and len(forced) < n):
                break
            arr = tuple(forced[x] if x in forced else rng.randrange(m) for x in range(n))
            chosen[t] = FinMap(n, m, arr)
        else:
            return Transformation(F, G, chosen)
    return None


def random_injection_family(X: Family, rng: random.Random, extra: int = 1) -> tuple[Family, Transformation]:
    """A family ``Y`` with a level-wise injective morphism ``X -> Y``.

    ``Y`` is ``X`` plus a random family on the same support, joined by coproduct.
    """
    from .freelax import family_coproduct, inclusion_between
    extra_fam = random_family(X.labels, X.max_degree, rng, extra, increasing_support(X.labels))
    Y = family_coproduct(X, extra_fam)
    return Y, inclusion_between(X, Y)


"""Command line front end: load JSON descriptions, run the library, report.

Exit codes: 0 success, 1 semantic failure (validation, convergence, a
failed check), 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import operads as op
from .base import ModelData
from .cosegalify import cosegalify_global
from .errors import ConvergenceError, InputError, PreconditionError
from .freelax import gamma, pushout_free, theta, theta_inverse
from .laxdiag import (Family, Transformation, diagram_to_semicat, enumerate_morphisms, family_from_json,
                      is_cosegal, transformation_from_json, transformation_to_json, underlying_family,
                      validate_diagram, validate_family, validate_transformation)
from .reedy_skel import skeleton, skeleton_counit, truncate
from .suite import CRITERIA, run_criterion
from .sx import chain_key, dec_enumerate, degree, parse_chain


class Failure(Exception):
    """A semantic failure carrying a partial report (exit code 1)."""

    def __init__(self, message: str, payload: dict | None = None):
        super().__init__(message)
        self.payload = payload or {}


# ---------------------------------------------------------------------------
# loading


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from exc


def _load_family(data, args, lax: bool | None = None) -> Family:
    if not isinstance(data, dict):
        raise InputError("a diagram description must be a JSON object")
    data = dict(data)
    data.setdefault("max_degree", args.max_degree)
    return family_from_json(data, lax)


def _checked(F: Family, what: str) -> Family:
    rep = validate_diagram(F) if F.is_lax() else validate_family(F)
    if rep:
        raise Failure(f"{what} is not valid", {"violations": rep.to_json()})
    return F


def _sizes(F: Family) -> dict:
    return {chain_key(t): F.values[t] for t in F.chains()}


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args) -> dict:
    data = _read_json(args.file)
    F = _load_family(data, args)
    rep = validate_diagram(F) if F.is_lax() else validate_family(F)
    out = {"kind": "diagram" if F.is_lax() else "family", "violations": rep.to_json()}
    if rep:
        raise Failure(f"{len(rep)} violation(s): {', '.join(sorted(rep.kinds()))}", out)
    cs = is_cosegal(F)
    out["cosegal"] = bool(cs)
    out["non_cosegal_chains"] = cs.witnesses
    return out


def cmd_dec(args) -> dict:
    t = parse_chain(args.chain)
    decs = dec_enumerate(t)
    return {"chain": chain_key(t), "degree": degree(t), "count": len(decs),
            "decompositions": [[chain_key(b) for b in d] for d in decs]}


def cmd_free(args) -> dict:
    X = _checked(_load_family(_read_json(args.family), args, lax=False), "family")
    G = gamma(X)
    rep = validate_diagram(G)
    if rep:  # pragma: no cover - the free diagram is valid by construction
        raise Failure("free diagram failed validation", {"violations": rep.to_json()})
    return {"diagram": G.to_json(), "sizes": _sizes(G)}


def cmd_adjoint_check(args) -> dict:
    X = _checked(_load_family(_read_json(args.family), args, lax=False), "family")
    F = _checked(_load_family(_read_json(args.diagram), args, lax=True), "diagram")
    if X.labels != F.labels or X.max_degree != F.max_degree:
        raise InputError("family and diagram need the same objects and max_degree")
    G = gamma(X)
    UF = underlying_family(F)
    left = [Transformation(G, F, c) for c in enumerate_morphisms(G, F)]
    right = [Transformation(X, UF, c) for c in enumerate_morphisms(X, UF, laxity=False)]
    round_trip = (all(theta_inverse(theta(s), F, G).components == s.components for s in left)
                  and all(theta(theta_inverse(p, F, G)).components == p.components for p in right))
    out = {"hom_free": len(left), "hom_generators": len(right), "round_trip": round_trip}
    if len(left) != len(right) or not round_trip:
        raise Failure("adjunction check failed", out)
    return out


def _cosegalify(F, args):
    md = ModelData(F.base)
    try:
        return cosegalify_global(F, md, args.cap)
    except ConvergenceError as exc:
        payload = {"trace": exc.trace.to_json() if exc.trace is not None else None}
        raise Failure(str(exc), payload) from exc


def cmd_cosegalify(args) -> dict:
    F = _checked(_load_family(_read_json(args.diagram), args, lax=True), "diagram")
    S, eta, trace = _cosegalify(F, args)
    was = bool(is_cosegal(F))
    out = {"diagram": S.to_json(), "eta": transformation_to_json(eta), "trace": trace.to_json(),
           "input_cosegal": was, "output_cosegal": bool(is_cosegal(S)),
           "eta_bijective": eta.is_levelwise(S.base.is_iso), "sizes": _sizes(S)}
    if validate_diagram(S) or not out["output_cosegal"] or (was and not out["eta_bijective"]):
        raise Failure("Co-Segalification output failed its checks", out)  # pragma: no cover
    return out


def cmd_strictify(args) -> dict:
    F = _checked(_load_family(_read_json(args.diagram), args, lax=True), "diagram")
    if F.max_degree < 2:
        raise InputError("strictification needs max_degree at least 2")
    S, _, trace = _cosegalify(F, args)
    C = diagram_to_semicat(S)
    return {"rounds": len(trace.rounds),
            "hom": {f"{a}.{b}": n for (a, b), n in sorted(C.hom.items())},
            "composition": {f"{a}.{b}.{c}": m.to_json() for (a, b, c), m in sorted(C.comp.items())}}


def cmd_pushout(args) -> dict:
    a = _read_json(args.alpha)
    s = _read_json(args.sigma)
    try:
        A = _load_family(a["source"], args, lax=False)
        Bf = _load_family(a["target"], args, lax=False)
        F = _load_family(s["target"], args, lax=True)
        alpha = transformation_from_json(a["components"], A, Bf)
        pi = transformation_from_json(s["components"], A, underlying_family(F))
    except (KeyError, TypeError) as exc:
        raise InputError(f"pushout inputs need source, target and components: {exc}") from exc
    for X, what in ((A, "alpha source"), (Bf, "alpha target"), (F, "sigma target")):
        _checked(X, what)
    for tr, what in ((alpha, "alpha"), (pi, "sigma")):
        rep = validate_transformation(tr, laxity=False)
        if rep:
            raise Failure(f"{what} is not a morphism", {"violations": rep.to_json()})
    if A.labels != F.labels or A.max_degree != F.max_degree:
        raise InputError("alpha and sigma need the same objects and max_degree")
    GA = gamma(A)
    sigma = theta_inverse(pi, F, GA)
    try:
        res = pushout_free(alpha, sigma, cap=args.cap, GA=GA)
    except ConvergenceError as exc:
        raise Failure(str(exc)) from exc
    out = {"diagram": res.diagram.to_json(), "sweeps": res.sweeps, "sizes": _sizes(res.diagram),
           "into_pushout": transformation_to_json(res.H),
           "bijection_preserved": (not alpha.is_levelwise(A.base.is_iso))
           or res.H.is_levelwise(A.base.is_iso)}
    if validate_diagram(res.diagram) or not out["bijection_preserved"]:
        raise Failure("pushout failed its checks", out)  # pragma: no cover
    return out


def cmd_skeleton(args) -> dict:
    F = _checked(_load_family(_read_json(args.diagram), args, lax=True), "diagram")
    m = args.to
    if not 1 <= m <= F.max_degree:
        raise InputError(f"--to must lie between 1 and {F.max_degree}")
    S = skeleton(truncate(F, m))
    out = {"diagram": S.to_json(), "sizes": _sizes(S)}
    if F.max_degree > m:
        eps = skeleton_counit(truncate(F, m + 1))
        out["counit"] = transformation_to_json(eps)
        out["counit_bijective"] = eps.is_levelwise(F.base.is_iso)
    return out


def cmd_operad(args) -> dict:
    data = _read_json(args.file)
    if not isinstance(data, dict):
        raise InputError("operad input must be a JSON object")
    if args.operad_cmd == "ox":
        try:
            X = list(data["objects"])
        except (KeyError, TypeError) as exc:
            raise InputError("ox input needs a list of objects") from exc
        O = op.build_ox(X, int(data.get("max_arity", 3)), bool(data.get("nullary", True)))
        rep = op.validate_operad(O)
        out = {"colors": len(O.colors), "operations": len(O.ops), "violations": rep.to_json()}
        if data.get("emit"):
            out["operad"] = op.operad_to_json(O)
    elif args.operad_cmd == "validate":
        O = op.operad_from_json(data)
        rep = op.validate_operad(O)
        out = {"colors": len(O.colors), "operations": len(O.ops), "violations": rep.to_json()}
    else:
        T = op.twocat_from_json(data)
        rep = op.validate_twocategory(T)
        out = {"objects": len(T.objects), "violations": rep.to_json()}
        if not rep:
            M = op.twocat_to_algebra(T, int(data.get("max_arity", 3)))
            rep = op.validate_algebra(M)
            out["violations"] = rep.to_json()
            out["round_trip"] = op.algebra_to_twocat(M) == T
            if not out["round_trip"]:
                raise Failure("algebra round trip changed the 2-category", out)  # pragma: no cover
    if rep:
        raise Failure(f"{len(rep)} violation(s): {', '.join(sorted(rep.kinds()))}", out)
    return out


def _criterion(k_seed):
    k, seed = k_seed
    return run_criterion(k, seed)


def cmd_suite(args) -> dict:
    numbers = [k for k, _, _ in CRITERIA]
    if args.only:
        try:
            numbers = sorted({int(x) for x in args.only.split(",")})
        except ValueError as exc:
            raise InputError("--only takes a comma-separated list of numbers") from exc
        if any(k not in {c[0] for c in CRITERIA} for k in numbers):
            raise InputError("unknown criterion number")
    jobs = args.jobs
    work = [(k, args.seed) for k in numbers]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_criterion, work))
    else:
        results = [_criterion(w) for w in work]
    out = {"seed": args.seed, "criteria": [r.to_json() for r in results]}
    out["_lines"] = [r.line() for r in results]
    if not all(r.passed for r in results):
        raise Failure(f"{sum(not r.passed for r in results)} criterion(s) failed", out)
    return out


# ---------------------------------------------------------------------------
# parser and reporting


def _common(parser: argparse.ArgumentParser) -> None:
    S = argparse.SUPPRESS
    parser.add_argument("--report", choices=("text", "json"), default=S, help="output format")
    parser.add_argument("--max-degree", type=int, default=S, help="degree for inputs that omit it (3)")
    parser.add_argument("--cap", type=int, default=S, help="iteration cap (default 4N)")
    parser.add_argument("--base", choices=("finset",), default=S, help="base category")
    parser.add_argument("--seed", type=int, default=S, help="seed for randomized checks (0)")
    parser.add_argument("--jobs", type=int, default=S, help="worker processes (1)")


DEFAULTS = {"report": "text", "max_degree": 3, "cap": None, "base": "finset", "seed": 0, "jobs": 1}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cosegal", description=__doc__.splitlines()[0])
    _common(p)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, *positional, help=""):
        sp = sub.add_parser(name, help=help)
        for arg in positional:
            sp.add_argument(arg)
        _common(sp)
        sp.set_defaults(func=fn)
        return sp

    add("validate", cmd_validate, "file", help="validate a family or lax diagram")
    add("dec", cmd_dec, "chain", help="list the decompositions of a chain")
    add("free", cmd_free, "family", help="free lax diagram on a family")
    add("adjoint-check", cmd_adjoint_check, "family", "diagram", help="check the free-forgetful bijection")
    add("strictify", cmd_strictify, "diagram", help="Co-Segalify and read off the semi-category")
    add("cosegalify", cmd_cosegalify, "diagram", help="Co-Segalification with trace")
    add("pushout", cmd_pushout, "alpha", "sigma", help="pushout along a free map")
    sk = add("skeleton", cmd_skeleton, "diagram", help="skeleton of a truncation")
    sk.add_argument("--to", type=int, required=True, help="truncation degree")
    opp = sub.add_parser("operad", help="operad tools: ox, validate, twocat")
    opp.add_argument("operad_cmd", choices=("ox", "validate", "twocat"))
    opp.add_argument("file")
    _common(opp)
    opp.set_defaults(func=cmd_operad)
    st = add("suite", cmd_suite, help="run the acceptance suite")
    st.add_argument("--only", default=None, help="comma-separated criterion numbers")
    return p


def _render_text(command: str, ok: bool, payload: dict, error: str | None) -> str:
    lines = [f"{command}: {'ok' if ok else 'FAILED'}"]
    if error:
        lines.append(f"error: {error}")
    if "_lines" in payload:
        lines.extend(payload["_lines"])
        return "\n".join(lines)
    for key, val in payload.items():
        if isinstance(val, (dict, list)):
            val = json.dumps(val, sort_keys=True, separators=(",", ":"))
            if len(val) > 400:
                val = val[:400] + " ..."
        lines.append(f"{key}: {val}")
    return "\n".join(lines)


def _emit(args, ok: bool, payload: dict, error: str | None = None) -> None:
    fmt = getattr(args, "report", "text")
    command = getattr(args, "command", "cosegal")
    if fmt == "json":
        body = {k: v for k, v in payload.items() if not k.startswith("_")}
        body.update({"command": command, "ok": ok})
        if error:
            body["error"] = error
        print(json.dumps(body, sort_keys=True, indent=2))
    else:
        print(_render_text(command, ok, payload, error))


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    for k, v in DEFAULTS.items():
        if not hasattr(args, k):
            setattr(args, k, v)
    env_jobs = os.environ.get("COSEGAL_JOBS")
    if env_jobs:
        try:
            args.jobs = int(env_jobs)
        except ValueError:
            _emit(args, False, {}, "COSEGAL_JOBS must be an integer")
            return 2
    try:
        if args.max_degree < 1 or (args.cap is not None and args.cap < 0) or args.jobs < 1:
            raise InputError("--max-degree and --jobs must be positive, --cap non-negative")
        payload = args.func(args)
    except InputError as exc:
        _emit(args, False, {}, str(exc))
        return 2
    except Failure as exc:
        _emit(args, False, exc.payload, str(exc))
        return 1
    except (PreconditionError, ConvergenceError) as exc:
        _emit(args, False, {}, str(exc))
        return 1
    _emit(args, True, payload)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

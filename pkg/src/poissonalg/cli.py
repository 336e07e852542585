"""Command-line interface.

Exit codes: 0 success, 1 a mathematical negative (carrying a ``witness``
field), 2 bad input.  Output is deterministic for identical inputs.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .bracket import (
    JacobiError,
    OreExtensionError,
    is_poisson_ideal,
    jacobi_check,
    ore_extend,
    quotient,
    tensor,
)
from .center import DEFAULT_MAX_DEGREE, center_basis
from .derivation import find_poisson_lnds, is_poisson_derivation, lnd_status, ml_kernel
from .discriminant import discriminant_poisson_points
from .groebner import buchberger, eliminate
from .parsing import ParseError, parse_algebra, parse_polynomial
from .polycore import DEGREVLEX, LEX, Ring
from .skewiso import MAX_SEARCH_DIM, SkewMatrix, _row_signature, iso_decision, parse_matrix


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None


def _load(path: str, skip_jacobi: bool = False):
    try:
        return parse_algebra(_read(path), check_jacobi=not skip_jacobi)
    except ParseError as e:
        raise InputError(f"{path}:{e}") from None
    except JacobiError as e:
        raise InputError(f"{path}: {e}") from None


def _poly(src: str, ring: Ring, what: str):
    try:
        return parse_polynomial(src, ring)
    except ParseError as e:
        raise InputError(f"{what}: {e}") from None


def _ring(spec: str) -> Ring:
    names = [n.strip() for n in spec.split(",") if n.strip()]
    try:
        return Ring(names)
    except ValueError as e:
        raise InputError(str(e)) from None


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if v is None or isinstance(v, (bool, int, str)):
        return v
    return str(v)


def _emit(payload: Dict, fmt: str, out) -> None:
    payload = _jsonable(payload)
    if fmt == "json":
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        return
    for key in sorted(payload):
        val = payload[key]
        if isinstance(val, list):
            out.write(f"{key}:\n")
            for item in val:
                out.write(f"  {json.dumps(item) if isinstance(item, (dict, list)) else item}\n")
        elif isinstance(val, dict):
            out.write(f"{key}: {json.dumps(val, sort_keys=True)}\n")
        else:
            out.write(f"{key}: {val}\n")


# -- subcommands ---------------------------------------------------------------


def cmd_jacobi(args) -> tuple:
    P = _load(args.file, skip_jacobi=True).structure
    chk = jacobi_check(P)
    if chk:
        return 0, {"command": "jacobi", "result": "ok"}
    return 1, {"command": "jacobi", "result": "fails", "witness": {"triple": list(chk.witness), "jacobiator": str(chk.value)}}


def cmd_center(args) -> tuple:
    P = _load(args.file, args.skip_jacobi).structure
    rep = center_basis(P, args.max_degree)
    return 0, {
        "command": "center",
        "basis": [str(b) for b in rep.basis],
        "complete_up_to": rep.complete_up_to,
        "note": "degree-bounded part of the Poisson center only",
    }


def _pick(alg, names: Optional[Sequence[str]]):
    if not alg.derivations:
        raise InputError("the algebra file defines no derivations")
    if not names:
        return sorted(alg.derivations.items())
    out = []
    for n in names:
        if n not in alg.derivations:
            raise InputError(f"no derivation named {n!r}")
        out.append((n, alg.derivations[n]))
    return out


def cmd_derivation(args) -> tuple:
    alg = _load(args.file, args.skip_jacobi)
    P = alg.structure
    chosen = _pick(alg, args.name)
    if args.action == "check":
        results, witness = {}, {}
        for n, d in chosen:
            chk = is_poisson_derivation(P, d)
            results[n] = bool(chk)
            if not chk:
                witness[n] = {"at": list(chk.witness), "defect": str(chk.value)}
        payload = {"command": "derivation check", "poisson_derivation": results}
        if witness:
            payload["witness"] = witness
            return 1, payload
        return 0, payload
    if args.action == "lnd":
        results, witness = {}, {}
        for n, d in chosen:
            st = lnd_status(d, args.bound)
            results[n] = {"status": st.status, "order": st.order}
            if st.status == "not_nilpotent":
                var, j, k, c = st.witness
                witness[n] = {"variable": var, "iterates": [j, k], "scalar": str(c)}
        payload = {"command": "derivation lnd", "bound": args.bound, "lnd": results}
        if witness:
            payload["witness"] = witness
            return 1, payload
        return 0, payload
    # ml: kernel of the family given in the file
    try:
        rep = ml_kernel(P, [d for _, d in chosen], args.max_degree, nilpotency_bound=args.bound)
    except ValueError as e:
        raise InputError(str(e)) from None
    return 0, {
        "command": "derivation ml",
        "family": [n for n, _ in chosen],
        "kernel_basis": [str(b) for b in rep.kernel_basis],
        "max_degree": rep.dmax,
        "note": rep.note,
    }


def cmd_ml(args) -> tuple:
    P = _load(args.file, args.skip_jacobi).structure
    search = find_poisson_lnds(P, args.image_degree, args.bound)
    rep = ml_kernel(P, search.certified, args.max_degree, nilpotency_bound=args.bound)
    return 0, {
        "command": "ml",
        "image_degree_bound": args.image_degree,
        "nilpotency_bound": args.bound,
        "poisson_derivation_dimension": search.solution_dimension,
        "certified_lnds": [str(d) for d in search.certified],
        "kernel_basis": [str(b) for b in rep.kernel_basis],
        "max_degree": args.max_degree,
        "note": "relative to the certified family found at these bounds; evidence, not a proof",
    }


def cmd_discriminant(args) -> tuple:
    alg = _load(args.file, args.skip_jacobi)
    P = alg.structure
    g = _central_element(args.center, alg)
    try:
        rep = discriminant_poisson_points(P, g)
    except ValueError as e:
        raise InputError(str(e)) from None
    payload = {"command": "discriminant"}
    payload.update(rep.to_dict())
    return 0, payload


def _central_element(src: str, alg):
    # "f" names the potential when the file has one and no variable is called f
    ring = alg.structure.ring
    if alg.potential is None or "f" in ring:
        return _poly(src, ring, "--center")
    big = ring.extend("f")
    p = _poly(src, big, "--center")
    images = dict(zip(ring.names, ring.gens))
    images["f"] = alg.potential
    return p.substitute(images)


def cmd_skewiso(args) -> tuple:
    try:
        a = parse_matrix(_read(args.a))
        b = parse_matrix(_read(args.b))
    except ValueError as e:
        raise InputError(str(e)) from None
    for m, path in ((a, args.a), (b, args.b)):
        if m.n > MAX_SEARCH_DIM:
            raise InputError(f"{path}: dimension {m.n} exceeds the supported maximum {MAX_SEARCH_DIM}")
    dec = iso_decision(a, b)
    payload = {"command": "skewiso", "isomorphic": dec.isomorphic, "warnings": dec.warnings}
    if dec.isomorphic:
        payload.update(
            sigma=dec.cycles,
            sigma_map=[s + 1 for s in dec.sigma],
            relabeling=dec.relabeling,
            poisson_map_check=dec.poisson_map_ok,
        )
        return 0, payload
    payload["witness"] = _skew_witness(a, b)
    return 1, payload


def _skew_witness(a: SkewMatrix, b: SkewMatrix) -> Dict:
    if a.n != b.n:
        return {"reason": "dimension mismatch", "dimensions": [a.n, b.n]}
    ra = sorted(_row_signature(a, i) for i in range(a.n))
    rb = sorted(_row_signature(b, i) for i in range(b.n))
    if ra != rb:
        return {"reason": "row entry multisets differ"}
    return {"reason": "no permutation matches all entries"}


def _order(name: str):
    return LEX if name == "lex" else DEGREVLEX


def cmd_groebner(args) -> tuple:
    ring = _ring(args.ring)
    gens = [_poly(s, ring, "generator") for s in args.polys]
    gb = buchberger(gens, _order(args.order), ring=ring)
    payload = {"command": "groebner", "order": str(gb.order), "basis": [g.format(gb.order) for g in gb]}
    if gb.is_zero_dimensional() and not gb.is_zero_ideal():
        payload["quotient_dimension"] = gb.quotient_dimension()
    return 0, payload


def cmd_member(args) -> tuple:
    ring = _ring(args.ring)
    p = _poly(args.poly, ring, "candidate")
    gens = [_poly(s, ring, "generator") for s in args.ideal]
    gb = buchberger(gens, DEGREVLEX, ring=ring)
    nf = gb.normal_form(p)
    if nf.is_zero():
        return 0, {"command": "member", "member": True}
    return 1, {"command": "member", "member": False, "witness": {"normal_form": str(nf)}}


def cmd_eliminate(args) -> tuple:
    ring = _ring(args.ring)
    gens = [_poly(s, ring, "generator") for s in args.polys]
    keep = [n.strip() for n in args.keep.split(",") if n.strip()]
    try:
        out = eliminate(gens, keep, ring=ring)
    except (KeyError, ValueError) as e:
        raise InputError(str(e)) from None
    return 0, {"command": "eliminate", "keep": keep, "basis": [str(g) for g in out]}


def cmd_quotient(args) -> tuple:
    P = _load(args.file, args.skip_jacobi).structure
    gens = [_poly(s, P.ring, "--ideal") for s in args.ideal]
    chk = is_poisson_ideal(P, gens)
    if not chk:
        g, v = chk.witness
        return 1, {
            "command": "quotient",
            "poisson_ideal": False,
            "witness": {"generator": g, "variable": v, "bracket": str(chk.value)},
        }
    Q = quotient(P, gens)
    return 0, {"command": "quotient", "poisson_ideal": True, "algebra": Q.to_text().splitlines()}


def cmd_tensor(args) -> tuple:
    P = _load(args.a, args.skip_jacobi).structure
    Q = _load(args.b, args.skip_jacobi).structure
    T = tensor(P, Q)
    return 0, {"command": "tensor", "algebra": T.to_text().splitlines()}


def cmd_ore(args) -> tuple:
    alg = _load(args.file, args.skip_jacobi)
    P = alg.structure
    found = {}
    for role in ("alpha", "delta"):
        name = getattr(args, role)
        if name is not None and name not in alg.derivations:
            raise InputError(f"no derivation named {name!r}")
        found[role] = alg.derivations[name] if name is not None else None
    try:
        E = ore_extend(P, found["alpha"], found["delta"], z=args.var)
    except OreExtensionError as e:
        return 1, {"command": "ore", "extension": False, "witness": {"law": str(e), "at": list(e.check.witness), "defect": str(e.check.value)}}
    except JacobiError as e:
        return 1, {"command": "ore", "extension": False, "witness": {"law": "jacobi", "at": list(e.check.witness), "defect": str(e.check.value)}}
    except ValueError as e:
        raise InputError(str(e)) from None
    return 0, {"command": "ore", "extension": True, "algebra": E.to_text().splitlines()}


# -- argument parsing ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--skip-jacobi", action="store_true", help="do not verify the Jacobi identity on load")

    p = argparse.ArgumentParser(prog="poissonalg", description="Exact computations with polynomial Poisson algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("jacobi", parents=[common], help="check the Jacobi identity of an algebra file")
    s.add_argument("file")
    s.set_defaults(func=cmd_jacobi)

    s = sub.add_parser("center", parents=[common], help="degree-bounded Poisson center")
    s.add_argument("file")
    s.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    s.set_defaults(func=cmd_center)

    s = sub.add_parser("derivation", parents=[common], help="check derivations defined in an algebra file")
    s.add_argument("action", choices=("check", "lnd", "ml"))
    s.add_argument("file")
    s.add_argument("--name", action="append", help="derivation to use (repeatable; default all)")
    s.add_argument("--bound", type=int, default=16, help="iteration bound for nilpotency")
    s.add_argument("--max-degree", type=int, default=4)
    s.set_defaults(func=cmd_derivation)

    s = sub.add_parser("ml", parents=[common], help="kernel of the certified Poisson LNDs found at given bounds")
    s.add_argument("file")
    s.add_argument("--image-degree", type=int, default=1)
    s.add_argument("--bound", type=int, default=16, help="iteration bound for nilpotency")
    s.add_argument("--max-degree", type=int, default=4)
    s.set_defaults(func=cmd_ml)

    s = sub.add_parser("discriminant", parents=[common], help="discriminant of the Poisson-point locus")
    s.add_argument("file")
    s.add_argument("--center", required=True, help="central element, e.g. 'x^2 - y*z'")
    s.set_defaults(func=cmd_discriminant)

    s = sub.add_parser("skewiso", parents=[common], help="isomorphism of skew quadratic algebras")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_skewiso)

    s = sub.add_parser("groebner", parents=[common], help="reduced Groebner basis")
    s.add_argument("--ring", required=True, help="comma-separated variables")
    s.add_argument("--order", choices=("degrevlex", "lex"), default="degrevlex")
    s.add_argument("polys", nargs="+")
    s.set_defaults(func=cmd_groebner)

    s = sub.add_parser("member", parents=[common], help="ideal membership")
    s.add_argument("--ring", required=True)
    s.add_argument("poly")
    s.add_argument("ideal", nargs="+")
    s.set_defaults(func=cmd_member)

    s = sub.add_parser("eliminate", parents=[common], help="elimination ideal")
    s.add_argument("--ring", required=True)
    s.add_argument("--keep", required=True, help="comma-separated variables to keep")
    s.add_argument("polys", nargs="+")
    s.set_defaults(func=cmd_eliminate)

    s = sub.add_parser("quotient", parents=[common], help="quotient by a Poisson ideal")
    s.add_argument("file")
    s.add_argument("--ideal", action="append", required=True, help="ideal generator (repeatable)")
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("tensor", parents=[common], help="tensor product of two algebras")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_tensor)

    s = sub.add_parser("ore", parents=[common], help="Poisson-Ore extension A[z; alpha, delta]")
    s.add_argument("file")
    s.add_argument("--alpha", help="derivation name from the file")
    s.add_argument("--delta", help="derivation name from the file")
    s.add_argument("--var", default="z")
    s.set_defaults(func=cmd_ore)
    return p


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    for flag in ("max_degree", "bound", "image_degree"):
        if getattr(args, flag, 0) is not None and getattr(args, flag, 0) < 0:
            err.write(f"error: --{flag.replace('_', '-')} must be non-negative\n")
            return 2
    try:
        code, payload = args.func(args)
    except InputError as e:
        err.write(f"error: {e}\n")
        return 2
    _emit(payload, args.format, out)
    return code


def main() -> None:
    sys.exit(run())

"""Command-line front end.

Every subcommand prints canonical JSON (sorted keys, no trailing spaces)
on stdout so reruns are byte-identical.  Exit codes: 0 success, 1
verification failure, 2 usage or precondition error.  The only ambient
configuration is BURKHARDT_WORKERS for scan parallelism, which never
affects output content or order.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import BurkhardtError, ScanCapError
from .fields import Field, QQ, field_make
from .invariants import (binary_discriminant, igusa_clebsch,
                         igusa_weighted_equal)
from .maps import phi_eval, psi_eval
from .moduli import cubic_cover, curve_from_point, level3_decompositions
from .projective import ProjPoint, parse_point
from .quartic import node_census, off_hessian_points
from .verify import DEFAULT_ZETA_QS, run_scope
from .zeta import (DEFAULT_COUNT_CAP, count_burkhardt,
                   hessian_intersection_count, off_hessian_count,
                   zeta_burkhardt, zeta_desing)
from .errors import DegeneracyError


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    sys.stdout.write("\n")


def _fail(message: str, code: int = 2) -> int:
    _emit({"error": message})
    return code


def _parse_field(spec: str | None) -> Field:
    if spec is None:
        return QQ
    parts = spec.split(",")
    p = int(parts[0])
    k = int(parts[1]) if len(parts) > 1 else 1
    modulus = None
    if len(parts) > 2:
        modulus = tuple(int(c) for c in parts[2].split(":"))
    return field_make(p, k, modulus)


def _fmt_elem(c) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}" if c.denominator != 1 else str(c.numerator)
    return str(c)


def _fmt_point(pt: ProjPoint) -> str:
    return ":".join(_fmt_elem(c) for c in pt.coords)


def _curve_payload(alpha: ProjPoint) -> dict:
    model = curve_from_point(alpha)
    decs = level3_decompositions(alpha)
    return {
        "alpha": _fmt_point(alpha),
        "sextic": [_fmt_elem(c) for c in model.sextic_coeffs()],
        "model": {
            "H": str(model.H),
            "G": str(model.G),
            "lambda": _fmt_elem(model.lam),
            "flavor": model.flavor,
        },
        "discriminant": _fmt_elem(model.discriminant()),
        "decompositions": [
            {
                "label": d.label,
                "d": d.d,
                "H": str(d.H),
                "lambda": _fmt_elem(d.lam),
                "G": str(d.G),
                "verified": True,
            }
            for d in decs
        ],
    }


def cmd_verify(args) -> int:
    qs = tuple(args.q) if args.q else None
    checks = run_scope(args.scope, qs=qs)
    passed = sum(1 for c in checks if c["pass"])
    failed = len(checks) - passed
    payload = {
        "scope": args.scope,
        "passed": passed,
        "failed": failed,
        "ok": failed == 0,
    }
    if not args.quiet:
        payload["checks"] = checks
    _emit(payload)
    return 0 if failed == 0 else 1


def cmd_count(args) -> int:
    q = args.q
    try:
        if args.nodes:
            nodes = node_census(q)
            _emit({"q": q, "kind": "nodes", "count": len(nodes)})
        elif args.off_hessian:
            brute = off_hessian_count(q, "brute")
            formula = off_hessian_count(q, "formula")
            _emit({"q": q, "kind": "off-hessian", "count": brute,
                   "formula": formula, "agrees": brute == formula})
        elif args.hessian_intersection:
            count = hessian_intersection_count(q)
            total = count_burkhardt(q, 1, cap=args.cap)
            formula = off_hessian_count(q, "formula")
            _emit({"q": q, "kind": "hessian-intersection", "count": count,
                   "formula": total - formula, "agrees": count == total - formula})
        else:
            brute = count_burkhardt(q, args.n, cap=args.cap)
            predicted = zeta_burkhardt(q).count(args.n)
            _emit({"q": q, "n": args.n, "kind": "points", "count": brute,
                   "formula": predicted, "agrees": brute == predicted})
    except (BurkhardtError, ScanCapError) as err:
        return _fail(str(err))
    return 0


def cmd_zeta(args) -> int:
    try:
        z = zeta_desing(args.q) if args.desing else zeta_burkhardt(args.q)
    except BurkhardtError as err:
        return _fail(str(err))
    _emit({
        "q": args.q,
        "variety": "desingularization" if args.desing else "burkhardt",
        "factors": z.as_pairs(),
        "count_n1": z.count(1),
    })
    return 0


def cmd_param(args) -> int:
    field = _parse_field(args.field)
    try:
        point = parse_point(args.point, field)
        if args.direction == "phi":
            if len(point.coords) == 4:
                result = phi_eval(point, field)
            else:
                return _fail("phi expects 4 homogeneous coordinates t0:t1:t2:t3")
            smooth_side = "phi"
        else:
            if len(point.coords) != 5:
                return _fail("psi expects 5 homogeneous coordinates y0:...:y4")
            result = psi_eval(point)
            smooth_side = "psi"
        from .maps import smooth_point_test
        smooth = smooth_point_test(point, smooth_side)
        _emit({
            "direction": args.direction,
            "input": _fmt_point(point),
            "output": _fmt_point(result),
            "smooth": smooth,
        })
    except BurkhardtError as err:
        return _fail(str(err))
    return 0


def cmd_curve(args) -> int:
    field = _parse_field(args.field)
    try:
        alpha = parse_point(args.alpha, field)
        payload = _curve_payload(alpha)
    except DegeneracyError as err:
        return _fail(f"degenerate ({err.label}): {err}")
    except BurkhardtError as err:
        return _fail(str(err))
    _emit(payload)
    return 0


def cmd_cover(args) -> int:
    field = _parse_field(args.field)
    try:
        alpha = parse_point(args.alpha, field)
        cover = cubic_cover(alpha)
        payload = {
            "alpha": _fmt_point(alpha),
            "plane_cubic": str(cover.plane_cubic),
            "cover_coefficients": [str(c) for c in cover.coefficients],
            "discriminant_sextic": str(cover.discriminant_sextic),
        }
        nondegenerate = None
        matches = None
        if field.p not in (2, 3, 5):
            nondegenerate = binary_discriminant(
                cover.discriminant_sextic) != field.zero
            try:
                model = curve_from_point(alpha)
                matches = igusa_weighted_equal(
                    igusa_clebsch(cover.discriminant_sextic),
                    igusa_clebsch(model.F))
            except DegeneracyError:
                matches = None
        payload["nondegenerate"] = nondegenerate
        payload["igusa_matches_curve"] = matches
    except DegeneracyError as err:
        return _fail(f"degenerate ({err.label}): {err}")
    except BurkhardtError as err:
        return _fail(str(err))
    _emit(payload)
    return 0


def cmd_scan(args) -> int:
    try:
        census = off_hessian_points(args.q)
    except BurkhardtError as err:
        return _fail(str(err))
    for alpha in census:
        try:
            payload = _curve_payload(alpha)
        except DegeneracyError as err:
            payload = {"alpha": _fmt_point(alpha), "skipped": err.label}
        _emit(payload)
    return 0


def cmd_nodes(args) -> int:
    try:
        nodes = node_census(args.q)
    except BurkhardtError as err:
        return _fail(str(err))
    _emit({
        "q": args.q,
        "count": len(nodes),
        "nodes": [_fmt_point(p) for p in nodes],
    })
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="burkhardt",
        description="Exact computations on the Burkhardt quartic threefold.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("scope", nargs="?", default="all",
                   choices=["all", "identities", "zeta", "moduli"])
    p.add_argument("--q", type=int, action="append",
                   help="override the q-set for the zeta suite (repeatable)")
    p.add_argument("--quiet", action="store_true",
                   help="suppress per-check detail")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="exact point counts over F_q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_COUNT_CAP)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--off-hessian", action="store_true")
    group.add_argument("--nodes", action="store_true")
    group.add_argument("--hessian-intersection", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("zeta", help="closed-form zeta factor lists")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--desing", action="store_true",
                   help="zeta of the blow-up of the 45 nodes")
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("param", help="evaluate the parametrization maps")
    p.add_argument("--direction", choices=["phi", "psi"], required=True)
    p.add_argument("--point", required=True,
                   help="colon-separated homogeneous coordinates")
    p.add_argument("--field", help="p[,k[,c0:c1:...:ck]]")
    p.set_defaults(func=cmd_param)

    p = sub.add_parser("curve", help="curve model and certificates at a point")
    p.add_argument("--alpha", required=True)
    p.add_argument("--field", required=True)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("cover", help="cubic cover and discriminant sextic")
    p.add_argument("--alpha", required=True)
    p.add_argument("--field", required=True)
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("scan", help="off-Hessian census with curve summaries")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("nodes", help="node census over F_q")
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_nodes)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BurkhardtError as err:
        return _fail(str(err))


if __name__ == "__main__":
    sys.exit(main())

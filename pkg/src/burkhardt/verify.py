"""Named verification suites: the identity block, the zeta/count checks,
and the moduli certificate sweeps.

Each check returns a dict {name, detail, pass}; the suites are shared by
the command-line ``verify`` subcommand and the acceptance tests.
"""

from __future__ import annotations

import random

from .errors import BurkhardtError, DegeneracyError
from .fields import QQ, field_make
from .invariants import (binary_discriminant, igusa_clebsch,
                         igusa_weighted_equal)
from .maps import phi_eval, verify_roundtrip
from .moduli import (DivisorPair, coble_quadrics, cubic_cover,
                     curve_data_symbolic, curve_from_point,
                     level3_decompositions, marked_plane_cubic,
                     tangency_check, torsion_triples, verify_divisor_line)
from .poly import MultiPoly, RatFunc, cubic_discriminant
from .projective import LinearSubspace
from .quartic import (burkhardt_form, node_census, off_hessian_points,
                      polars_symbolic, rational_jplanes, jplane_labels)
from .zeta import (count_burkhardt, off_hessian_count, point_count_from_zeta,
                   verify_desing_correction, zeta_burkhardt)

DEFAULT_ZETA_QS = (2, 4, 5, 7, 8, 11, 13)
DEFAULT_COUNT_BOUND = 256


def _check(name, ok, detail=""):
    return {"name": name, "detail": detail, "pass": bool(ok)}


# ---------------------------------------------------------------------------
# identity suite
# ---------------------------------------------------------------------------

def identity_checks() -> list[dict]:
    checks = []
    rt = verify_roundtrip()
    checks.append(_check(
        "parametrization-image",
        rt["f_on_image_zero"],
        "quartic vanishes identically on the image of the parametrization"))
    for entry in rt["representatives"]:
        checks.append(_check(
            f"inverse-roundtrip-rep{entry['representative']}",
            entry["ok"],
            "composition with the parametrization divides back to (1:t1:t2:t3)"))

    triples = torsion_triples()
    sextics = [t.G * t.G + t.H ** 3 * t.lam * 4 for t in triples[:4]]
    ref = sextics[1]
    common = all(s == ref for s in sextics)
    checks.append(_check(
        "torsion-common-sextic", common,
        "the four order-3 triples produce one common binary sextic"))
    dual = triples[4]
    dual_sextic = dual.G * dual.G + dual.H ** 3 * dual.lam * 4
    checks.append(_check(
        "torsion-dual-ratio", dual_sextic == ref * (-3),
        "the dual triple produces exactly -3 times the common sextic"))

    # the explicit curve formulas are the third triple
    H3, lam3, G3 = curve_data_symbolic()
    tr3 = triples[2]
    checks.append(_check(
        "curve-model-is-third-triple",
        _affine_matches(tr3.H, H3, 2) and _affine_matches(tr3.lam, lam3, 0)
        and _affine_matches(tr3.G, G3, 3),
        "the explicit curve model (H, lambda, G) equals the third triple"))

    # restriction of the cubic polar to y0 = y1 = 0
    p1 = polars_symbolic()[0]
    rest = p1.substitute({"y0": 0, "y1": 0})
    g = MultiPoly.gens(QQ, rest.vars)
    a0, a1 = g[0], g[1]
    y2, y3, y4 = g[7], g[8], g[9]
    expected = a0 * (y2 ** 3 + y3 ** 3 + y4 ** 3) + 3 * a1 * y2 * y3 * y4
    checks.append(_check(
        "polar-restriction-cubic", rest == expected,
        "cubic polar restricted to the marked plane is the Hesse-pencil cubic"))

    # disc(w^3 + 3 lam H w + lam G) = -27 lam^2 (G^2 + 4 lam H^3)
    t1 = triples[0]
    one = RatFunc.from_scalar(QQ, t1.H.num.vars, 1)
    zero = RatFunc.from_scalar(QQ, t1.H.num.vars, 0)
    disc = cubic_discriminant(one, zero, t1.H * t1.lam * 3, t1.G * t1.lam)
    rhs = (t1.G * t1.G + t1.H ** 3 * t1.lam * 4) * t1.lam * t1.lam * (-27)
    checks.append(_check(
        "cover-discriminant-identity", disc == rhs,
        "cubic-cover discriminant equals -27 lambda^2 times the sextic"))
    return checks


def _affine_matches(rf: RatFunc, form: MultiPoly, degree: int) -> bool:
    """Compare X-affine rational data with an (x,z,a*)-homogeneous form."""
    from .moduli import AVARS, BVARS
    terms = {}
    for e, c in rf.num.terms.items():
        terms[(e[0], degree - e[0]) + e[1:]] = c
    num = MultiPoly(QQ, BVARS + AVARS, terms)
    den = MultiPoly(QQ, BVARS + AVARS,
                    {(0, 0) + e[1:]: c for e, c in rf.den.terms.items()})
    return RatFunc(num, den) == RatFunc(form)


# ---------------------------------------------------------------------------
# zeta suite
# ---------------------------------------------------------------------------

def zeta_checks(qs=DEFAULT_ZETA_QS, bound=DEFAULT_COUNT_BOUND) -> list[dict]:
    checks = []
    for q in qs:
        zb = zeta_burkhardt(q)
        n = 1
        while q ** n <= bound:
            brute = count_burkhardt(q, n)
            predicted = point_count_from_zeta(zb, n)
            checks.append(_check(
                f"zeta-count-q{q}-n{n}", brute == predicted,
                f"brute force {brute} vs closed form {predicted}"))
            n += 1
    for q in qs:
        checks.append(_check(
            f"desing-correction-q{q}", verify_desing_correction(q),
            "blow-up zeta equals quartic zeta times per-node corrections"))
    for q in tuple(qs) + ((16,) if 16 not in qs else ()):
        brute = off_hessian_count(q, "brute")
        formula = off_hessian_count(q, "formula")
        checks.append(_check(
            f"off-hessian-q{q}", brute == formula,
            f"brute {brute} vs formula {formula}"))
    for q in qs:
        expected = 45 if q % 3 == 1 else 7
        got = len(node_census(q))
        checks.append(_check(
            f"node-census-q{q}", got == expected,
            f"{got} rational nodes, expected {expected}"))
    return checks


# ---------------------------------------------------------------------------
# moduli suite
# ---------------------------------------------------------------------------

def moduli_checks(census_qs=(5, 11), tangency_points=10,
                  igusa_points=10) -> list[dict]:
    checks = []
    for q in census_qs:
        field = field_make(q)
        census = off_hessian_points(q)
        admissible = 0
        degenerate = {}
        failures = 0
        for alpha in census:
            try:
                decs = level3_decompositions(alpha)
            except DegeneracyError as err:
                degenerate[err.label] = degenerate.get(err.label, 0) + 1
                continue
            except BurkhardtError:
                failures += 1
                continue
            admissible += 1
            model = curve_from_point(alpha)
            if binary_discriminant(model.F) == field.zero:
                failures += 1
        checks.append(_check(
            f"census-certificates-q{q}", failures == 0 and admissible > 0,
            f"census {len(census)}, admissible {admissible} all certified, "
            f"degenerate {degenerate}"))

        # tangency of the four rational j-planes through y0 = 0
        planes = rational_jplanes(field)[:4]
        labels = jplane_labels()[:4]
        tested = 0
        tangency_ok = True
        for alpha in census:
            try:
                curve_from_point(alpha)
            except DegeneracyError:
                continue
            for label, plane in zip(labels, planes):
                if not tangency_check(alpha, plane):
                    tangency_ok = False
            tested += 1
            if tested >= tangency_points:
                break
        checks.append(_check(
            f"jplane-tangency-q{q}", tangency_ok and tested >= tangency_points,
            f"projected J1..J4 tangent to the dual Kummer at {tested} points"))

        # a constructed non-tangent plane must fail
        control = _nontangent_control(census, field)
        checks.append(_check(
            f"nontangent-control-q{q}", control,
            "a scanned control plane is not tangent at depth 1"))

    checks.append(_check("divisor-lines", _divisor_line_sweep(),
                         "50 random divisor pairs and 10 doubled points over "
                         "F_7, F_11, F_13"))

    # igusa comparison of the cover discriminant, on the nondegenerate part
    field = field_make(11)
    census = off_hessian_points(11)
    tested = 0
    ok = True
    for alpha in census:
        try:
            model = curve_from_point(alpha)
            cover = cubic_cover(alpha)
        except DegeneracyError:
            continue
        if binary_discriminant(cover.discriminant_sextic) == field.zero:
            continue  # outside the open part where the raw cover is smooth
        if not igusa_weighted_equal(igusa_clebsch(cover.discriminant_sextic),
                                    igusa_clebsch(model.F)):
            ok = False
        tested += 1
        if tested >= igusa_points:
            break
    checks.append(_check(
        "cover-igusa-f11", ok and tested >= igusa_points,
        f"cover discriminant matches the curve at {tested} points of F_11"))

    rational = _rational_cover_checks(3)
    checks.append(_check(
        "cover-igusa-rational", rational >= 3,
        f"cover discriminant matches the curve at {rational} rational points"))
    return checks


def _nontangent_control(census, field) -> bool:
    """Scan for a plane whose projection is certified non-tangent."""
    for alpha in census:
        try:
            curve_from_point(alpha)
        except DegeneracyError:
            continue
        for c in range(field.order or 0):
            rows = [(0, 1, 0, 0, c), (0, 0, 1, 0, 1), (0, 0, 0, 1, 0)]
            try:
                plane = LinearSubspace(field, rows)
                if not tangency_check(alpha, plane, depth=1):
                    return True
            except (DegeneracyError, BurkhardtError):
                continue
        return False
    return False


def _divisor_line_sweep() -> bool:
    rng = random.Random(20260810)
    for q in (7, 11, 13):
        field = field_make(q)
        sextic = _any_sextic(field)
        for _ in range(50):
            pts = []
            while len(pts) < 2:
                x1, z1 = rng.randrange(q), rng.randrange(q)
                if (x1, z1) != (0, 0):
                    pts.append((x1, z1))
            if not verify_divisor_line(sextic, DivisorPair.make(field, *pts)):
                return False
        doubled = 0
        while doubled < 10:
            x1, z1 = rng.randrange(q), rng.randrange(q)
            if (x1, z1) == (0, 0):
                continue
            if not verify_divisor_line(
                    sextic, DivisorPair.make(field, (x1, z1), (x1, z1))):
                return False
            doubled += 1
    return True


def _any_sextic(field):
    from .poly import parse_poly
    return parse_poly("x^6 + z^6", ("x", "z"), field)


def _rational_cover_checks(needed: int) -> int:
    count = 0
    for t1 in range(-2, 3):
        for t2 in range(-2, 3):
            for t3 in range(-2, 3):
                try:
                    alpha = phi_eval((t1, t2, t3))
                    model = curve_from_point(alpha)
                    cover = cubic_cover(alpha)
                except BurkhardtError:
                    continue
                if binary_discriminant(cover.discriminant_sextic) == 0:
                    continue
                if igusa_weighted_equal(
                        igusa_clebsch(cover.discriminant_sextic),
                        igusa_clebsch(model.F)):
                    count += 1
                else:
                    return -1
                if count >= needed:
                    return count
    return count


SCOPES = {
    "identities": identity_checks,
    "zeta": zeta_checks,
    "moduli": moduli_checks,
}


def run_scope(scope: str, qs=None) -> list[dict]:
    if scope == "all":
        checks = []
        checks += identity_checks()
        checks += zeta_checks(qs or DEFAULT_ZETA_QS)
        checks += moduli_checks()
        return checks
    if scope == "zeta":
        return zeta_checks(qs or DEFAULT_ZETA_QS)
    if scope in SCOPES:
        return SCOPES[scope]()
    raise BurkhardtError(f"unknown verification scope {scope!r}")

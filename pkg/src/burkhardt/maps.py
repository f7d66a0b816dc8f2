"""The birational parametrization of the quartic and its inverse.

``phi`` maps affine 3-space (the chart t0 = 1 of P^3) onto the quartic;
``psi`` maps the quartic back, with four alternative polynomial
representatives that jointly extend it to everything but 24 nodes.
The composition identities are checked symbolically over the integers
by :func:`verify_roundtrip`; the numeric evaluators work over any field
of characteristic different from 3.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import BaseLocusError, BurkhardtError, CharacteristicError
from .fields import QQ, Field, as_element
from .poly import MultiPoly, parse_poly
from .projective import ProjPoint
from .quartic import YVARS, burkhardt_form, burkhardt_gradient

TVARS = ("t1", "t2", "t3")

PHI_COMPONENT_TEXT = [
    "t1^3-3*t1^2*t3-3*t1*t2^2-3*t1*t2*t3-t2^3-1",
    "-t1^3+3*t1^2*t3-3*t1*t3^2+t2^3+1",
    "-t1^4+t1^3*t2+3*t1^3*t3-3*t1^2*t2*t3-3*t1^2*t3^2-2*t1*t2^3-3*t1*t2^2*t3"
    "+t1-t2^4-t2",
    "-t1^4+4*t1^3*t3+3*t1^2*t2^2+3*t1^2*t2*t3-3*t1^2*t3^2+t1*t2^3-3*t1*t2^2*t3"
    "-3*t1*t2*t3^2+t1-t2^3*t3-t3",
    "-t1^4-t1^3*t2+2*t1^3*t3+3*t1^2*t2*t3+t1*t2^3+3*t1*t2^2*t3+t1+t2^4"
    "+t2^3*t3+t2+t3",
]

PSI_REPRESENTATIVE_TEXT = [
    [
        "y0^3-y0^2*y1+y0*y1^2",
        "-y0^2*y3-y0^2*y4+y0*y1*y2",
        "y0^2*y2-y0*y1*y2+y0*y1*y3+y0*y1*y4",
        "-y0^2*y4+y0*y1*y2-y0*y1*y3+y1^2*y3",
    ],
    [
        "3*y0*y2^2*y4-3*y0*y3^2*y4+3*y0*y3*y4^2-3*y0*y4^3-3*y1*y2^2*y4"
        "-3*y1*y2*y3*y4-3*y1*y2*y4^2",
        "-3*y0^3*y4-3*y0^2*y1*y4-3*y2^3*y4-3*y2^2*y3*y4-3*y2^2*y4^2",
        "3*y0^2*y1*y4+3*y0*y1^2*y4+3*y2^3*y4-3*y2*y3^2*y4+3*y2*y3*y4^2"
        "-3*y2*y4^3",
        "y0^3*y2+y0^3*y3-2*y0^3*y4-3*y0^2*y1*y4+y1^3*y2+y1^3*y3+y1^3*y4+y2^4"
        "+y2^3*y3-2*y2^3*y4-3*y2^2*y4^2+y2*y3^3+y2*y4^3+y3^4-2*y3^3*y4"
        "+3*y3^2*y4^2-2*y3*y4^3+y4^4",
    ],
    [
        "3*y0^2*y2*y4-3*y0*y1*y2*y4+3*y1^2*y2*y4",
        "-3*y0*y2*y3*y4-3*y0*y2*y4^2+3*y1*y2^2*y4",
        "3*y0*y2^2*y4-3*y1*y2^2*y4+3*y1*y2*y3*y4+3*y1*y2*y4^2",
        "-y0^3*y1-3*y0*y2*y4^2-y1^4-y1*y2^3+3*y1*y2^2*y4-3*y1*y2*y3*y4"
        "-y1*y3^3-y1*y4^3",
    ],
    [
        "-y0^2*y2*y3-y0^2*y2*y4-y0^2*y3^2+y0^2*y3*y4-y0^2*y4^2-y0*y1*y2^2"
        "+y0*y1*y3^2-y0*y1*y3*y4+y0*y1*y4^2",
        "y0^2*y1^2+y0*y1^3+y0*y2*y3^2+2*y0*y2*y3*y4+y0*y2*y4^2+y0*y3^3"
        "+y0*y4^3+3*y1*y2*y3*y4",
        "y0^3*y1-y0*y1^3-y0*y2^2*y3-y0*y2^2*y4-y0*y2*y3^2+y0*y2*y3*y4"
        "-y0*y2*y4^2-3*y1*y2*y3*y4",
        "y0^2*y1^2+y0*y1^3+y0*y2*y3*y4+y0*y2*y4^2+y0*y3^2*y4-y0*y3*y4^2"
        "+y0*y4^3-y1*y2^2*y3+3*y1*y2*y3*y4+y1*y3^3-y1*y3^2*y4+y1*y3*y4^2",
    ],
]


@lru_cache(maxsize=None)
def phi_components() -> tuple[MultiPoly, ...]:
    """The five affine components of phi over Z, in variables t1,t2,t3."""
    return tuple(parse_poly(text, TVARS, QQ) for text in PHI_COMPONENT_TEXT)


@lru_cache(maxsize=None)
def psi_representatives() -> tuple[tuple[MultiPoly, ...], ...]:
    """Four alternative 4-tuples of forms presenting the inverse map."""
    return tuple(
        tuple(parse_poly(text, YVARS, QQ) for text in rep)
        for rep in PSI_REPRESENTATIVE_TEXT)


@lru_cache(maxsize=None)
def phi_components_homogeneous() -> tuple[MultiPoly, ...]:
    """Degree-4 homogenizations of the phi components in (t0,t1,t2,t3)."""
    tvars = ("t0",) + TVARS
    out = []
    for comp in phi_components():
        terms = {}
        for e, c in comp.terms.items():
            d = sum(e)
            terms[(4 - d,) + e] = c
        out.append(MultiPoly(QQ, tvars, terms))
    return tuple(out)


def _require_char_ne_3(field: Field):
    if field.p == 3:
        raise CharacteristicError("parametrization requires characteristic != 3")


def phi_eval(t, field: Field = QQ) -> ProjPoint:
    """Evaluate phi at affine (t1, t2, t3); raises on the base locus."""
    _require_char_ne_3(field)
    if isinstance(t, ProjPoint):
        if t.coords[0] == field.zero:
            raise BurkhardtError("phi is defined on the chart t0 != 0 only")
        inv = field.inv(t.coords[0])
        coords = [field.mul(c, inv) for c in t.coords[1:]]
    else:
        coords = [as_element(field, x) for x in t]
    if len(coords) != 3:
        raise BurkhardtError("phi expects affine coordinates (t1, t2, t3)")
    vals = []
    for comp in phi_components():
        c = comp.map_field(field) if field.order is not None else comp
        vals.append(c.evaluate_elems(coords) if field.order is not None
                    else c.evaluate(coords))
    if all(v == field.zero for v in vals):
        raise BaseLocusError(f"phi undefined at {tuple(coords)}: base-locus point")
    return ProjPoint(field, vals)


def psi_eval(y: ProjPoint) -> ProjPoint:
    """Evaluate psi at a point of the quartic.

    The four representatives are tried in their fixed order and the
    first with a nonvanishing component tuple wins, so outputs are
    deterministic.  Points off the quartic are rejected; base-locus
    points (all four representatives vanish) raise BaseLocusError.
    """
    field = y.field
    _require_char_ne_3(field)
    f = burkhardt_form()
    fv = f.map_field(field).evaluate_elems(y.coords) if field.order is not None \
        else f.evaluate(y.coords)
    if fv != field.zero:
        raise BurkhardtError(f"{y} does not lie on the quartic")
    for rep in psi_representatives():
        vals = []
        for comp in rep:
            c = comp.map_field(field) if field.order is not None else comp
            vals.append(c.evaluate_elems(y.coords) if field.order is not None
                        else c.evaluate(y.coords))
        if any(v != field.zero for v in vals):
            return ProjPoint(field, vals)
    raise BaseLocusError(f"psi undefined at {y}: all representatives vanish")


def verify_roundtrip() -> dict:
    """Symbolic composition identities over the integers.

    Checks that the quartic vanishes on the image of phi, and that every
    psi representative composed with phi returns (1 : t1 : t2 : t3): the
    zeroth composition divides the others exactly with quotients t1, t2,
    t3.  Division is performed with an explicit remainder assertion.
    """
    f = burkhardt_form()
    phi = phi_components()
    shared_cache: dict = {}
    composed_f = f.substitute(dict(zip(YVARS, phi)), power_cache=shared_cache)
    report = {"f_on_image_zero": composed_f.is_zero(), "representatives": []}
    tgens = MultiPoly.gens(QQ, TVARS)
    for idx, rep in enumerate(psi_representatives(), start=1):
        comps = [c.substitute(dict(zip(YVARS, phi)), power_cache=shared_cache)
                 for c in rep]
        entry = {"representative": idx}
        c0 = comps[0]
        ok = not c0.is_zero()
        quotients = []
        if ok:
            for ci, expected in zip(comps[1:], tgens):
                quotient, rem = ci.divmod_poly(c0)
                exact = rem.is_zero() and quotient == expected
                quotients.append(exact)
                ok = ok and exact
        entry["quotients_are_t"] = quotients
        entry["ok"] = ok
        report["representatives"].append(entry)
    report["ok"] = report["f_on_image_zero"] and all(
        e["ok"] for e in report["representatives"])
    return report


@lru_cache(maxsize=None)
def _phi_jacobian_minors() -> tuple[MultiPoly, ...]:
    """All 4x4 minors of the 5x4 Jacobian of homogenized phi."""
    from .poly import poly_matrix_det
    comps = phi_components_homogeneous()
    tvars = ("t0",) + TVARS
    jac = [[c.derivative(v) for v in tvars] for c in comps]
    minors = []
    for skip in range(5):
        rows = [jac[i] for i in range(5) if i != skip]
        minors.append(poly_matrix_det(rows))
    return tuple(minors)


@lru_cache(maxsize=None)
def _psi_jacobian_dets() -> tuple[MultiPoly, ...]:
    """Per representative: det of the four component gradients plus grad f."""
    from .poly import poly_matrix_det
    grads_f = burkhardt_gradient()
    dets = []
    for rep in psi_representatives():
        cols = [[comp.derivative(v) for v in YVARS] for comp in rep]
        cols.append(list(grads_f))
        matrix = [[cols[i][j] for i in range(5)] for j in range(5)]
        dets.append(poly_matrix_det(matrix))
    return tuple(dets)


def smooth_point_test(point, side: str) -> bool:
    """Point-level smoothness of the chosen map representation.

    side "phi": the homogenized Jacobian has full rank at the affine
    point (some 4x4 minor is nonzero).  side "psi": at least one
    representative's 5x5 determinant condition is nonzero at the point,
    which must lie on the quartic.
    """
    if side == "phi":
        if isinstance(point, ProjPoint):
            field = point.field
            if point.coords[0] == field.zero:
                raise BurkhardtError("phi smoothness is tested on the chart t0 != 0")
            inv = field.inv(point.coords[0])
            coords = (field.one,) + tuple(field.mul(c, inv) for c in point.coords[1:])
        else:
            field = QQ
            coords = (1,) + tuple(as_element(QQ, x) for x in point)
        _require_char_ne_3(field)
        for minor in _phi_jacobian_minors():
            m = minor.map_field(field) if field.order is not None else minor
            val = m.evaluate_elems(coords) if field.order is not None \
                else m.evaluate(coords)
            if val != field.zero:
                return True
        return False
    if side == "psi":
        if not isinstance(point, ProjPoint):
            raise BurkhardtError("psi smoothness expects a projective point")
        field = point.field
        _require_char_ne_3(field)
        for det in _psi_jacobian_dets():
            d = det.map_field(field) if field.order is not None else det
            val = d.evaluate_elems(point.coords) if field.order is not None \
                else d.evaluate(point.coords)
            if val != field.zero:
                return True
        return False
    raise BurkhardtError('side must be "phi" or "psi"')

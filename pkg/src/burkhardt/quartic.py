"""The Burkhardt quartic threefold: defining form, Hessian, polars,
rational j-planes, nodes, and the group action.

Everything here refuses characteristic 3: the quartic degenerates there
and none of the downstream constructions apply.
"""

from __future__ import annotations

from functools import lru_cache

from .counting import scan_projective
from .errors import BurkhardtError, CharacteristicError
from .fields import QQ, Field, field_for_order
from .poly import MultiPoly, parse_poly
from .projective import LinearSubspace, ProjPoint, hyperplane

YVARS = ("y0", "y1", "y2", "y3", "y4")


def _require_char_ne_3(field: Field):
    if field.p == 3:
        raise CharacteristicError("the Burkhardt quartic requires characteristic != 3")


@lru_cache(maxsize=None)
def burkhardt_form() -> MultiPoly:
    """The quartic y0(y0^3+y1^3+y2^3+y3^3+y4^3) + 3 y1 y2 y3 y4 over Q."""
    return parse_poly(
        "y0^4 + y0*y1^3 + y0*y2^3 + y0*y3^3 + y0*y4^3 + 3*y1*y2*y3*y4",
        YVARS, QQ)


@lru_cache(maxsize=None)
def burkhardt_gradient():
    f = burkhardt_form()
    return tuple(f.derivative(v) for v in YVARS)


@lru_cache(maxsize=None)
def hessian_form() -> MultiPoly:
    """det of the matrix of second partials, divided by 486.

    The result is an integer form of degree 10 with content 1.
    """
    from .poly import poly_matrix_det
    f = burkhardt_form()
    matrix = [[f.derivative(u).derivative(v) for v in YVARS] for u in YVARS]
    det = poly_matrix_det(matrix)
    he = det.divexact_scalar(486)
    if he.content() != 1:
        raise BurkhardtError("Hessian normalization lost integrality")
    return he


def polars(alpha) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    """The three polar forms of the quartic at a point of P^4.

    Degrees 3, 2, 1 in y; the linear one is the tangent-space form.  The
    point may be a ProjPoint or a raw coordinate sequence; coefficients
    land in the point's field.
    """
    if isinstance(alpha, ProjPoint):
        field = alpha.field
        a = list(alpha.coords)
    else:
        field = QQ
        a = [QQ.coerce(x) for x in alpha]
    _require_char_ne_3(field)
    y = MultiPoly.gens(field, YVARS)
    a0, a1, a2, a3, a4 = a
    cubes = [yi ** 3 for yi in y]
    p1 = ((4 * cubes[0] + cubes[1] + cubes[2] + cubes[3] + cubes[4]).scale(a0)
          + (3 * y[0] * y[1] ** 2 + 3 * y[2] * y[3] * y[4]).scale(a1)
          + (3 * y[0] * y[2] ** 2 + 3 * y[1] * y[3] * y[4]).scale(a2)
          + (3 * y[0] * y[3] ** 2 + 3 * y[1] * y[2] * y[4]).scale(a3)
          + (3 * y[0] * y[4] ** 2 + 3 * y[1] * y[2] * y[3]).scale(a4))
    mul = field.mul
    sq = [mul(ai, ai) for ai in a]
    p2 = (y[0] ** 2).scale(mul(field.coerce(2), sq[0]))
    for i in range(1, 5):
        p2 = p2 + (y[0] * y[i]).scale(sq[i])
        p2 = p2 + (y[i] ** 2).scale(mul(a[0], a[i]))
    pair_coeff = {  # cross terms y_i y_j pick up a_k a_l of the complement
        (1, 2): (3, 4), (1, 3): (2, 4), (1, 4): (2, 3),
        (2, 3): (1, 4), (2, 4): (1, 3), (3, 4): (1, 2),
    }
    for (i, j), (k, l) in pair_coeff.items():
        p2 = p2 + (y[i] * y[j]).scale(mul(a[k], a[l]))
    grads = burkhardt_gradient()
    p3 = MultiPoly.zero(field, YVARS)
    for gi, yi in zip(grads, y):
        val = gi.map_field(field).evaluate_elems(a) if field.order is not None \
            else gi.evaluate(a)
        p3 = p3 + yi.scale(val)
    return p1, p2, p3


@lru_cache(maxsize=None)
def polars_symbolic():
    """The three polar forms over Q with symbolic center (a0..a4).

    Same displayed formulas as :func:`polars`, with the center
    coordinates as variables; used for identities that hold for every
    center, like the restriction to a j-plane.
    """
    variables = ("a0", "a1", "a2", "a3", "a4") + YVARS
    g = MultiPoly.gens(QQ, variables)
    a = g[:5]
    y = g[5:]
    cubes = [yi ** 3 for yi in y]
    p1 = (a[0] * (4 * cubes[0] + cubes[1] + cubes[2] + cubes[3] + cubes[4])
          + a[1] * (3 * y[0] * y[1] ** 2 + 3 * y[2] * y[3] * y[4])
          + a[2] * (3 * y[0] * y[2] ** 2 + 3 * y[1] * y[3] * y[4])
          + a[3] * (3 * y[0] * y[3] ** 2 + 3 * y[1] * y[2] * y[4])
          + a[4] * (3 * y[0] * y[4] ** 2 + 3 * y[1] * y[2] * y[3]))
    p2 = 2 * a[0] ** 2 * y[0] ** 2
    for i in range(1, 5):
        p2 = p2 + a[i] ** 2 * y[0] * y[i] + a[0] * a[i] * y[i] ** 2
    pair_coeff = {
        (1, 2): (3, 4), (1, 3): (2, 4), (1, 4): (2, 3),
        (2, 3): (1, 4), (2, 4): (1, 3), (3, 4): (1, 2),
    }
    for (i, j), (k, l) in pair_coeff.items():
        p2 = p2 + a[k] * a[l] * y[i] * y[j]
    p3 = (y[0] * (4 * a[0] ** 3 + a[1] ** 3 + a[2] ** 3 + a[3] ** 3 + a[4] ** 3)
          + y[1] * (3 * a[0] * a[1] ** 2 + 3 * a[2] * a[3] * a[4])
          + y[2] * (3 * a[0] * a[2] ** 2 + 3 * a[1] * a[3] * a[4])
          + y[3] * (3 * a[0] * a[3] ** 2 + 3 * a[1] * a[2] * a[4])
          + y[4] * (3 * a[0] * a[4] ** 2 + 3 * a[1] * a[2] * a[3]))
    return p1, p2, p3


@lru_cache(maxsize=None)
def _jplane_data():
    # J_i: y0 = y_i = 0; J_i': y0 + ... + y4 = y0 + y_i = 0
    planes = []
    for i in range(1, 5):
        rows = [tuple(1 if k == j else 0 for k in range(5))
                for j in range(1, 5) if j != i]
        planes.append(("J%d" % i, rows))
    for i in range(1, 5):
        rows = [[0] * 5 for _ in range(3)]
        # y0 = -y_i, and the remaining coordinates sum to zero
        others = [j for j in range(1, 5) if j != i]
        rows[0][0] = 1
        rows[0][i] = -1
        rows[1][others[0]] = 1
        rows[1][others[1]] = -1
        rows[2][others[0]] = 1
        rows[2][others[2]] = -1
        planes.append(("J%d'" % i, [tuple(r) for r in rows]))
    return tuple(planes)


def rational_jplanes(field: Field = QQ) -> list[LinearSubspace]:
    """The 8 rational j-planes, in order J1..J4, J1'..J4'."""
    _require_char_ne_3(field)
    return [LinearSubspace(field, rows) for _, rows in _jplane_data()]


def jplane_labels() -> list[str]:
    return [name for name, _ in _jplane_data()]


def steiner_primes(field: Field = QQ) -> list[LinearSubspace]:
    """The two rational Steiner primes: y0 = 0 and y0+...+y4 = 0.

    Each meets the quartic in four of the rational j-planes (J1..J4 and
    J1'..J4' respectively).
    """
    _require_char_ne_3(field)
    return [hyperplane(field, (1, 0, 0, 0, 0)),
            hyperplane(field, (1, 1, 1, 1, 1))]


def node_census(q: int) -> list[ProjPoint]:
    """All points of P^4(F_q) where the quartic and its gradient vanish.

    Exhaustive scan; the result is ordered lexicographically on the
    normalized coordinates.
    """
    field = field_for_order(q)
    _require_char_ne_3(field)
    f = burkhardt_form()
    polys = [f] + list(burkhardt_gradient())
    _, pts = scan_projective(polys, field, 4, mode="all_zero", collect=True)
    return [ProjPoint(field, p, normalized=True) for p in pts]


def off_hessian_points(q: int) -> list[ProjPoint]:
    """Points of the quartic avoiding its Hessian, over F_q."""
    field = field_for_order(q)
    _require_char_ne_3(field)
    _, pts = scan_projective([burkhardt_form(), hessian_form()], field, 4,
                             mode="zero_nonzero", collect=True)
    return [ProjPoint(field, p, normalized=True) for p in pts]


def is_on_quartic(alpha: ProjPoint) -> bool:
    f = burkhardt_form().map_field(alpha.field)
    return f.evaluate_elems(alpha.coords) == alpha.field.zero


def is_off_hessian(alpha: ProjPoint) -> bool:
    he = hessian_form().map_field(alpha.field)
    return he.evaluate_elems(alpha.coords) != alpha.field.zero


# ---------------------------------------------------------------------------
# group action
# ---------------------------------------------------------------------------

def group_generators(field: Field = QQ):
    """Generator matrices of the symmetry group acting on row vectors.

    The first two are rational; the third needs a primitive cube root of
    unity and is omitted (returned as None) when the field has none.
    """
    _require_char_ne_3(field)
    c = field.coerce
    neg = field.neg
    g1 = [[neg(c(1)) if (i, j) in ((0, 0), (1, 1), (2, 4), (3, 3), (4, 2))
           else c(0) for j in range(5)] for i in range(5)]
    third = field.inv(c(3))
    base2 = [
        [1, 2, 2, 2, 2],
        [1, -1, -1, 2, -1],
        [1, -1, -1, -1, 2],
        [1, -1, 2, -1, -1],
        [1, 2, -1, -1, -1],
    ]
    g2 = [[field.mul(third, c(v)) for v in row] for row in base2]
    zeta = field.zeta3()
    if zeta is None:
        g3 = None
    else:
        zeta_inv = field.inv(zeta)
        g3 = [[c(0)] * 5 for _ in range(5)]
        g3[0][0] = neg(c(1))
        g3[1][1] = neg(c(1))
        g3[2][3] = neg(zeta_inv)
        g3[3][2] = neg(zeta)
        g3[4][4] = neg(c(1))
    return g1, g2, g3


def _act_on_form(form: MultiPoly, matrix, field: Field) -> MultiPoly:
    """form(y * M) for a row-vector right action."""
    y = MultiPoly.gens(field, YVARS)
    images = {}
    for i in range(5):
        img = MultiPoly.zero(field, YVARS)
        for j in range(5):
            if matrix[j][i] != field.zero:
                img = img + y[j].scale(matrix[j][i])
        images[YVARS[i]] = img
    return form.substitute(images)


def _plane_image(plane: LinearSubspace, matrix, field: Field) -> LinearSubspace:
    rows = []
    for row in plane.basis:
        rows.append(tuple(
            _dot(field, row, [matrix[j][i] for j in range(5)])
            for i in range(5)))
    return LinearSubspace(field, rows)


def _dot(field, u, v):
    acc = field.zero
    for a, b in zip(u, v):
        acc = field.add(acc, field.mul(a, b))
    return acc


def group_invariance_check(field: Field = QQ) -> dict:
    """Verify the quartic is invariant and how generators move j-planes.

    For each available generator the scalar c with f(y*M) = c*f is
    reported and asserted to be 1.  For the two rational generators the
    induced permutation of the 8 rational j-planes is returned; the
    second generator must swap J_i with J_i'.
    """
    _require_char_ne_3(field)
    f = burkhardt_form().map_field(field)
    g1, g2, g3 = group_generators(field)
    report = {"field": repr(field), "generators": []}
    planes = rational_jplanes(field)
    labels = jplane_labels()
    for name, matrix in (("g1", g1), ("g2", g2), ("g3", g3)):
        if matrix is None:
            report["generators"].append(
                {"name": name, "skipped": "no primitive cube root of unity"})
            continue
        transformed = _act_on_form(f, matrix, field)
        if transformed.is_zero() or f.is_zero():
            raise BurkhardtError("degenerate quartic under group action")
        # c with f(yM) = c f: compare a matching coefficient, then full equality
        e, coeff = f.leading_term()
        c = field.mul(transformed.coefficient(e), field.inv(coeff))
        entry = {"name": name, "scalar": c, "invariant": transformed == f.scale(c)}
        if name in ("g1", "g2"):
            perm = []
            for label, plane in zip(labels, planes):
                image = _plane_image(plane, matrix, field)
                target = None
                for lbl2, plane2 in zip(labels, planes):
                    if image == plane2:
                        target = lbl2
                        break
                perm.append((label, target))
            entry["jplane_map"] = perm
        report["generators"].append(entry)
    return report

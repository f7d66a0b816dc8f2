"""The moduli side of the quartic: the genus-2 curve attached to a point,
its five order-3 markings, and the Kummer/Weddle geometry behind them.

Conventions fixed here:

* Certificates are normalized so that ``d * (G^2 + 4*lambda*H^3) = F``
  holds exactly with ``d`` in {1, -3}.  The stored dual triple satisfies
  ``G'^2 + 4*lambda'*H'^3 = -3*F`` as written, so its certificate uses
  ``(H', lambda'/9, G'/3)``.
* The pairing between a line ``(xi1:xi2:xi3)`` and a conic point
  ``eta = (z^2 : -xz : x^2)`` is the reversed-index form
  ``xi1*eta3 + xi2*eta2 + xi3*eta1``; this is the unique index
  convention under which the displayed line and point data annihilate.
* Symmetroid and trope live in coordinates (e1:e2:e3:e4) on the target
  of the projection from alpha, identified with the hyperplane y0 = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BurkhardtError, CharacteristicError, DegeneracyError
from .fields import QQ, Field, field_make
from .invariants import binary_discriminant, sylvester_resultant
from .poly import MultiPoly, RatFunc, cubic_discriminant, parse_ratfunc, poly_matrix_det
from .projective import LinearSubspace, ProjPoint, hyperplane
from .quartic import hessian_form, is_off_hessian, is_on_quartic
from .torsion_data import TORSION_DUAL_TEXT, TORSION_TRIPLE_TEXT

AVARS = ("a1", "a2", "a3", "a4")
XAVARS = ("X",) + AVARS
BVARS = ("x", "z")
ZVARS = ("z0", "z1", "z2", "z3")
EVARS = ("e1", "e2", "e3", "e4")
UVARS = ("u1", "u2", "u3")

TORSION_LABELS = ("J1", "J2", "J3", "J4", "J4'")


# ---------------------------------------------------------------------------
# curve model from a point (explicit formulas)
# ---------------------------------------------------------------------------

def _curve_data(a1, a2, a3, a4, x, z):
    """H, lambda, G of the curve model; arguments live in one poly ring."""
    w = a4 ** 3 + 1
    k = a1 ** 2 * a4 ** 2 - a2 * a3
    H = a2 * x ** 2 - a3 * x * z - a1 * a4 * z ** 2
    G = ((a1 ** 3 * a4 ** 3 + 3 * a1 * a2 * a3 * a4 ** 4 + 2 * a2 ** 3 * a4 ** 3
          + a2 ** 3 + a3 ** 3 * a4 ** 3) * x ** 3
         + 3 * a2 * w * k * x ** 2 * z
         - 3 * a3 * w * k * x * z ** 2
         + (-2 * a1 ** 3 * a4 ** 6 - a1 ** 3 * a4 ** 3 + 3 * a1 * a2 * a3 * a4 ** 4
            + a2 ** 3 * a4 ** 3 - a3 ** 3) * z ** 3)
    lam = (a4 ** 3 * w * (a1 * a4 - a2 - a3)
           * (a1 ** 2 * a4 ** 2 + a1 * a2 * a4 + a1 * a3 * a4
              + a2 ** 2 - a2 * a3 + a3 ** 2))
    return H, lam, G


@dataclass(frozen=True)
class CurveModel:
    """A genus-2 curve y^2 = F(x, z) with its defining decomposition."""

    field: Field
    F: MultiPoly          # binary sextic in (x, z)
    H: MultiPoly          # binary quadratic
    G: MultiPoly          # binary cubic
    lam: object           # field element
    flavor: str           # "y^2 = F" or "y^2 + G y = lam H^3"

    def discriminant(self):
        return binary_discriminant(self.F)

    def sextic_coeffs(self):
        from .invariants import binary_coeffs
        return binary_coeffs(self.F, 6)


def curve_from_point(alpha: ProjPoint) -> CurveModel:
    """The explicit curve model attached to a quartic point.

    Requires alpha on the quartic, off the Hessian, with alpha0 and
    alpha4 nonzero; characteristic not 2 or 3 for the sextic flavor.
    The degeneracy lambda = 0 (which contains Hessian-adjacent loci) is
    rejected before the Hessian test so the failing factor is named.
    """
    field = alpha.field
    if field.p in (2, 3):
        raise CharacteristicError("curve model requires characteristic != 2, 3")
    if not is_on_quartic(alpha):
        raise BurkhardtError(f"{alpha} is not on the quartic")
    if alpha.coords[0] == field.zero:
        raise DegeneracyError("alpha0", f"{alpha} has alpha0 = 0")
    inv0 = field.inv(alpha.coords[0])
    a = [field.mul(c, inv0) for c in alpha.coords]
    if a[4] == field.zero:
        raise DegeneracyError("alpha4", f"{alpha} has alpha4 = 0")
    consts = [MultiPoly.const_elem(field, BVARS, ai) for ai in a[1:]]
    x, z = MultiPoly.gens(field, BVARS)
    H, lamp, G = _curve_data(*consts, x, z)
    lam = lamp.constant_value()
    if lam == field.zero:
        raise DegeneracyError("lambda", f"lambda vanishes at {alpha}")
    if not is_off_hessian(ProjPoint(field, a, normalized=True)):
        raise DegeneracyError("hessian", f"{alpha} lies on the Hessian")
    F = G * G + (H ** 3).scale(4).scale_elem(lam)
    model = CurveModel(field, F, H, G, lam, "y^2 = F")
    if model.discriminant() == field.zero:
        raise DegeneracyError("discriminant", f"singular sextic at {alpha}")
    return model


def curve_data_symbolic():
    """H, lambda, G over Q in (x, z, a1..a4); the master-identity carrier."""
    variables = BVARS + AVARS
    gens = MultiPoly.gens(QQ, variables)
    x, z = gens[0], gens[1]
    a1, a2, a3, a4 = gens[2:]
    return _curve_data(a1, a2, a3, a4, x, z)


# ---------------------------------------------------------------------------
# the five order-3 decomposition certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    """A certified identity d*(G^2 + 4*lambda*H^3) = F marking 3-torsion."""

    label: str
    d: int                # 1 or -3
    H: MultiPoly          # binary quadratic in (x, z)
    lam: object           # nonzero field element
    G: MultiPoly          # binary cubic in (x, z)

    @property
    def field(self):
        return self.H.field


class _TorsionTriple:
    """Parsed (H, lambda, G) with rational-function coefficients in a1..a4."""

    def __init__(self, label, d, texts):
        self.label = label
        self.d = d
        self.H = parse_ratfunc(texts[0], XAVARS, QQ)
        self.lam = parse_ratfunc(texts[1], XAVARS, QQ)
        self.G = parse_ratfunc(texts[2], XAVARS, QQ)
        for rf in (self.H, self.lam, self.G):
            if rf.den.degree_in("X") > 0:
                raise BurkhardtError("torsion data denominator involves X")

    def specialize(self, field: Field, a_tail):
        """(H, lambda, G) over ``field`` at a1..a4 = a_tail (normalized).

        Raises DegeneracyError naming the label when a denominator dies.
        """
        out = []
        for part, degree in ((self.H, 2), (self.lam, 0), (self.G, 3)):
            num = _eval_in_a(part.num, field, a_tail)      # coeffs by X-degree
            den = _eval_in_a(part.den, field, a_tail)[0]
            if den == field.zero:
                raise DegeneracyError(
                    f"{self.label}-denominator",
                    f"triple {self.label} degenerates: denominator vanishes")
            inv = field.inv(den)
            coeffs = [field.mul(c, inv) for c in num]
            if degree == 0:
                out.append(coeffs[0])
            else:
                out.append(_binary_from_affine(field, coeffs, degree))
        return tuple(out)


def _eval_in_a(poly: MultiPoly, field: Field, a_tail):
    """Evaluate the a-variables, keeping X; returns coeffs by X-degree."""
    src = poly if poly.field == field else poly.map_field(field)
    deg = max((e[0] for e in src.terms), default=0)
    coeffs = [field.zero] * (deg + 1)
    maxes = [0, 0, 0, 0]
    for e in src.terms:
        for i, ei in enumerate(e[1:]):
            if ei > maxes[i]:
                maxes[i] = ei
    powers = []
    for v, m in zip(a_tail, maxes):
        row = [field.one]
        for _ in range(m):
            row.append(field.mul(row[-1], v))
        powers.append(row)
    mul = field.mul
    add = field.add
    for e, c in src.terms.items():
        acc = c
        for i, ei in enumerate(e[1:]):
            if ei:
                acc = mul(acc, powers[i][ei])
        coeffs[e[0]] = add(coeffs[e[0]], acc)
    return coeffs


def _binary_from_affine(field: Field, coeffs, degree: int) -> MultiPoly:
    """sum(c_j X^j) with X = x/z, homogenized to the given degree."""
    terms = {}
    for j, c in enumerate(coeffs):
        if c != field.zero:
            terms[(j, degree - j)] = c
    return MultiPoly(field, BVARS, terms)


@lru_cache(maxsize=None)
def torsion_triples() -> tuple[_TorsionTriple, ...]:
    """The five triples, labels J1..J4 (d = 1) and J4' (d = -3)."""
    triples = [
        _TorsionTriple(label, 1, texts)
        for label, texts in zip(TORSION_LABELS, TORSION_TRIPLE_TEXT)
    ]
    triples.append(_TorsionTriple(TORSION_LABELS[4], -3, TORSION_DUAL_TEXT))
    return tuple(triples)


def level3_decompositions(alpha: ProjPoint) -> list[Decomposition]:
    """All five certified decompositions of the curve sextic at alpha.

    The raw dual triple produces -3*F; it is rescaled (lambda/9, G/3) so
    that the stored certificate satisfies the d = -3 identity exactly.
    """
    model = curve_from_point(alpha)
    field = alpha.field
    inv0 = field.inv(alpha.coords[0])
    a_tail = [field.mul(c, inv0) for c in alpha.coords[1:]]
    out = []
    for triple in torsion_triples():
        H, lam, G = triple.specialize(field, a_tail)
        if triple.d == -3:
            lam = field.mul(lam, field.inv(field.coerce(9)))
            G = G.scale_by_inverse(field.coerce(3))
        dec = Decomposition(triple.label, triple.d, H, lam, G)
        if not verify_order3_certificate(model.F, dec):
            raise BurkhardtError(
                f"certificate {triple.label} failed verification at {alpha}")
        out.append(dec)
    return out


def verify_order3_certificate(F: MultiPoly, dec: Decomposition) -> bool:
    """Exact identity d(G^2+4 lam H^3) = F plus nondegeneracy.

    Nondegeneracy means lambda != 0 and resultant(H, G) != 0 (coprime
    binary forms of formal degrees 2 and 3).
    """
    field = F.field
    if field.p == 2:
        raise CharacteristicError("certificates need characteristic != 2")
    if dec.lam == field.zero:
        return False
    combo = dec.G * dec.G + (dec.H ** 3).scale(4).scale_elem(dec.lam)
    lhs = combo.scale(dec.d)
    if lhs != F:
        return False
    from .invariants import binary_coeffs
    hc = binary_coeffs(dec.H, 2)
    gc = binary_coeffs(dec.G, 3)
    res = sylvester_resultant(hc, gc, field)
    return res != field.zero


# ---------------------------------------------------------------------------
# quadric systems, Weddle surface, symmetroid
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadricSystem:
    """Four quadratic forms in four variables over one field."""

    field: Field
    quadrics: tuple[MultiPoly, MultiPoly, MultiPoly, MultiPoly]

    @property
    def vars(self):
        return self.quadrics[0].vars

    def base_points(self, field: Field | None = None):
        """Common zeros in P^3 over the given (extension) field."""
        from .counting import scan_projective
        target = field or self.field
        quads = [q if target == self.field else _embed_poly(q, target)
                 for q in self.quadrics]
        _, pts = scan_projective(quads, target, 3, mode="all_zero", collect=True)
        return [ProjPoint(target, p, normalized=True) for p in pts]


def _embed_poly(poly: MultiPoly, target: Field) -> MultiPoly:
    if poly.field == target:
        return poly
    if poly.field.order is None:
        return poly.map_field(target)
    if poly.field.k == 1 and poly.field.p == target.p:
        return MultiPoly(target, poly.vars, dict(poly.terms), _clean=True)
    raise BurkhardtError("no canonical embedding for these coefficient fields")


def coble_quadrics(alpha: ProjPoint) -> QuadricSystem:
    """The four quadrics in (z0..z3) through the six marked points."""
    field = alpha.field
    a0, a1, a2, a3, a4 = alpha.coords
    z0, z1, z2, z3 = MultiPoly.gens(field, ZVARS)
    def s(poly, c):
        return poly.scale_elem(c)
    q1 = s(z0 * z0, a0) - s(z2 * z3, a2) - s(z1 * z3, a3) - s(z1 * z2, a4)
    q2 = s(z1 * z1, a0) + s(z2 * z3, a1) + s(z0 * z3, a3) - s(z0 * z2, a4)
    q3 = s(z2 * z2, a0) + s(z1 * z3, a1) - s(z0 * z3, a2) + s(z0 * z1, a4)
    q4 = s(z3 * z3, a0) + s(z1 * z2, a1) + s(z0 * z2, a2) - s(z0 * z1, a3)
    return QuadricSystem(field, (q1, q2, q3, q4))


def standard_quadrics(F: MultiPoly) -> QuadricSystem:
    """The rational-normal-curve quadrics plus the sextic's quadric."""
    from .invariants import binary_coeffs
    field = F.field
    f = binary_coeffs(F, 6)
    xv = ("x0", "x1", "x2", "x3")
    x0, x1, x2, x3 = MultiPoly.gens(field, xv)
    q1 = x0 * x2 - x1 * x1
    q2 = x0 * x3 - x1 * x2
    q3 = x1 * x3 - x2 * x2
    q4 = (x0 * x0).scale_elem(f[0]) + (x0 * x1).scale_elem(f[1]) \
        + (x1 * x1).scale_elem(f[2]) + (x1 * x2).scale_elem(f[3]) \
        + (x2 * x2).scale_elem(f[4]) + (x2 * x3).scale_elem(f[5]) \
        + (x3 * x3).scale_elem(f[6])
    return QuadricSystem(field, (q1, q2, q3, q4))


def weddle_surface(alpha: ProjPoint) -> MultiPoly:
    """det of the Jacobian of the four quadrics: the quartic of singular
    points of singular members."""
    system = coble_quadrics(alpha)
    jac = [[qi.derivative(v) for v in ZVARS] for qi in system.quadrics]
    return poly_matrix_det(jac)


def _gram_matrix(q: MultiPoly):
    """Symmetric matrix of the quadratic form (characteristic != 2)."""
    field = q.field
    half = field.inv(field.coerce(2))
    n = len(q.vars)
    m = [[field.zero] * n for _ in range(n)]
    for e, c in q.terms.items():
        idx = [i for i, ei in enumerate(e) if ei]
        if sum(e) != 2:
            raise BurkhardtError("not a quadratic form")
        if len(idx) == 1:
            m[idx[0]][idx[0]] = c
        else:
            i, j = idx
            m[i][j] = m[j][i] = field.mul(c, half)
    return m


def symmetroid(alpha: ProjPoint):
    """The dual-Kummer quartic det(sum e_i Q_i) in (e1..e4), and the trope.

    The trope is the image plane of the tangent space at alpha, with the
    displayed coefficient vector.
    """
    field = alpha.field
    if field.p == 2:
        raise CharacteristicError("symmetroid needs characteristic != 2")
    system = coble_quadrics(alpha)
    grams = [_gram_matrix(q) for q in system.quadrics]
    egens = MultiPoly.gens(field, EVARS)
    matrix = []
    for r in range(4):
        row = []
        for c in range(4):
            entry = MultiPoly.zero(field, EVARS)
            for gi, ei in zip(grams, egens):
                if gi[r][c] != field.zero:
                    entry = entry + ei.scale_elem(gi[r][c])
            row.append(entry)
        matrix.append(row)
    quartic = poly_matrix_det(matrix)
    a0, a1, a2, a3, a4 = alpha.coords
    mul = field.mul
    add = field.add
    def tc(u, v, w, t):
        return add(mul(a0, mul(u, u)), mul(v, mul(w, t)))
    coeffs = (tc(a1, a2, a3, a4), tc(a2, a1, a3, a4),
              tc(a3, a1, a2, a4), tc(a4, a1, a2, a3))
    trope = hyperplane(field, coeffs)
    return quartic, trope


def project_jplane(alpha: ProjPoint, plane: LinearSubspace) -> LinearSubspace:
    """Image of a plane under projection from alpha onto y0 = 0.

    Coordinates on the target are (e1..e4) = (y1..y4); the center must
    not lie on the plane and must have alpha0 != 0.
    """
    field = alpha.field
    if alpha.coords[0] == field.zero:
        raise BurkhardtError("projection needs alpha0 != 0")
    if plane.contains(alpha):
        raise BurkhardtError("projection center lies on the plane")
    inv0 = field.inv(alpha.coords[0])
    rows = []
    for row in plane.basis:
        factor = field.mul(row[0], inv0)
        image = [field.sub(x, field.mul(factor, ax))
                 for x, ax in zip(row[1:], alpha.coords[1:])]
        rows.append(image)
    return LinearSubspace(field, rows)


def tangency_witness(alpha: ProjPoint, plane: LinearSubspace,
                     depth: int = 2):
    """A singular point of the symmetroid restricted to a projected plane.

    The plane is parametrized by P^2 and the symmetroid restricted to
    it; tangency means the restricted plane quartic has a singular point
    over F_{q^j} for some j <= depth (found by exhaustive scan).  The
    witness is returned in the (e1..e4) coordinates, or None.  A
    restriction that vanishes identically is reported separately.
    """
    from .counting import scan_projective
    field = alpha.field
    quartic, _ = symmetroid(alpha)
    target = project_jplane(alpha, plane)
    ugens = MultiPoly.gens(field, UVARS)
    images = {}
    for i, name in enumerate(EVARS):
        acc = MultiPoly.zero(field, UVARS)
        for g, row in zip(ugens, target.basis):
            if row[i] != field.zero:
                acc = acc + g.scale_elem(row[i])
        images[name] = acc
    restricted = quartic.substitute(images)
    if restricted.is_zero():
        raise DegeneracyError("plane-in-symmetroid",
                              "plane lies inside the symmetroid")
    system = [restricted] + [restricted.derivative(u) for u in UVARS]
    for j in range(1, depth + 1):
        if j == 1:
            ext = field
        else:
            if field.k != 1:
                raise BurkhardtError(
                    "extension search needs a prime base field")
            ext = field_make(field.p, j)
        polys = [_embed_poly(p, ext) for p in system]
        _, pts = scan_projective(polys, ext, 2, mode="all_zero", collect=True)
        if pts:
            u = pts[0]
            coords = []
            for i in range(4):
                acc = ext.zero
                for uc, row in zip(u, target.basis):
                    acc = ext.add(acc, ext.mul(uc, row[i]))
                coords.append(acc)
            return ProjPoint(ext, coords)
    return None


def tangency_check(alpha: ProjPoint, plane: LinearSubspace,
                   depth: int = 2) -> bool:
    """Whether the projected plane is tangent to the dual-Kummer quartic."""
    return tangency_witness(alpha, plane, depth) is not None


# ---------------------------------------------------------------------------
# divisor lines on the marked trope
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DivisorPair:
    """x-line image of an effective degree-2 divisor: unordered point pair."""

    field: Field
    p1: tuple
    p2: tuple

    @classmethod
    def make(cls, field: Field, p1, p2):
        p1 = tuple(field.coerce(c) for c in p1)
        p2 = tuple(field.coerce(c) for c in p2)
        if p1 == (field.zero,) * 2 or p2 == (field.zero,) * 2:
            raise BurkhardtError("divisor points need nonzero coordinates")
        return cls(field, min(p1, p2), max(p1, p2))


def trope_line_of_divisor(D: DivisorPair):
    """Line coefficients (z1 z2 : x1 z2 + x2 z1 : x1 x2)."""
    field = D.field
    (x1, z1), (x2, z2) = D.p1, D.p2
    mul = field.mul
    add = field.add
    return (mul(z1, z2), add(mul(x1, z2), mul(x2, z1)), mul(x1, x2))


def conic_point(field: Field, x, z):
    """Image (z^2 : -xz : x^2) of an x-line point on the marked conic."""
    mul = field.mul
    return (mul(z, z), field.neg(mul(x, z)), mul(x, x))


def verify_divisor_line(F: MultiPoly, D: DivisorPair) -> bool:
    """The tangent-line identity for a divisor pair.

    Checks that both conic images annihilate the line under the
    reversed-index pairing xi1*eta3 + xi2*eta2 + xi3*eta1, and that the
    line's restriction to the conic is exactly the binary quadratic with
    roots the divisor (tangency falls out in the doubled case).  The
    sextic fixes the ambient curve and field; the incidence identity
    itself is independent of it.
    """
    field = D.field
    if F.field != field:
        raise BurkhardtError("divisor and sextic over different fields")
    xi = trope_line_of_divisor(D)
    mul = field.mul
    add = field.add
    for (xx, zz) in (D.p1, D.p2):
        eta = conic_point(field, xx, zz)
        pairing = add(add(mul(xi[0], eta[2]), mul(xi[1], eta[1])),
                      mul(xi[2], eta[0]))
        if pairing != field.zero:
            return False
    # restriction of the line to the conic equals prod (z_i x - x_i z)
    x, z = MultiPoly.gens(field, BVARS)
    restriction = (x * x).scale_elem(xi[0]) - (x * z).scale_elem(xi[1]) \
        + (z * z).scale_elem(xi[2])
    (x1, z1), (x2, z2) = D.p1, D.p2
    lin1 = x.scale_elem(z1) - z.scale_elem(x1)
    lin2 = x.scale_elem(z2) - z.scale_elem(x2)
    return restriction == lin1 * lin2


# ---------------------------------------------------------------------------
# cubic covers and their discriminant sextics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CubicCover:
    """A plane cubic fibered in degree 3 over the x-line, with its data."""

    field: Field
    plane_cubic: MultiPoly          # in (y2, y3, y4)
    coefficients: tuple             # (a, b, c, d) binary forms in (x, z)
    discriminant_sextic: MultiPoly  # binary sextic in (x, z)


def marked_plane_cubic(alpha: ProjPoint) -> MultiPoly:
    """a0(y2^3+y3^3+y4^3) + 3 a1 y2 y3 y4: the cubic polar restricted to
    the plane y0 = y1 = 0."""
    field = alpha.field
    a0, a1 = alpha.coords[0], alpha.coords[1]
    y2, y3, y4 = MultiPoly.gens(field, ("y2", "y3", "y4"))
    return ((y2 ** 3 + y3 ** 3 + y4 ** 3).scale_elem(a0)
            + (y2 * y3 * y4).scale(3).scale_elem(a1))


def cubic_cover(alpha: ProjPoint) -> CubicCover:
    """Project the marked plane cubic from (a2:a3:a4) to the x-line.

    Substituting (y2, y3, y4) = (a2 w, a3 w + x, a4 w + z) yields a
    cubic in w over (x, z) whose discriminant is a binary sextic
    recovering the curve model up to quadratic twist.
    """
    field = alpha.field
    if not is_on_quartic(alpha):
        raise BurkhardtError(f"{alpha} is not on the quartic")
    E = marked_plane_cubic(alpha)
    a2, a3, a4 = alpha.coords[2], alpha.coords[3], alpha.coords[4]
    lead = E.evaluate_elems((a2, a3, a4))
    if lead == field.zero:
        raise DegeneracyError("projection-center",
                              "projection center lies on the plane cubic")
    wxz = ("w",) + BVARS
    w, x, z = MultiPoly.gens(field, wxz)
    images = {
        "y2": w.scale_elem(a2),
        "y3": w.scale_elem(a3) + x,
        "y4": w.scale_elem(a4) + z,
    }
    cover = E.substitute(images)
    coeffs = []
    for d in range(3, -1, -1):
        terms = {}
        for e, c in cover.terms.items():
            if e[0] == d:
                terms[(e[1], e[2])] = c
        coeffs.append(MultiPoly(field, BVARS, terms))
    a, b, c, dcf = coeffs
    disc = cubic_discriminant(a, b, c, dcf)
    if disc.is_zero() or disc.degree() != 6 or not disc.is_homogeneous():
        raise DegeneracyError("discriminant-sextic",
                              "cover discriminant is not a sextic")
    return CubicCover(field, E, (a, b, c, dcf), disc)

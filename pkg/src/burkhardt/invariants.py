"""Invariants of binary sextics: transvectants, Igusa-Clebsch, discriminant.

Normalization (fixed here once and locked by a regression test):

* ``A = (f,f)_6``, ``i = (f,f)_4``, ``B = (i,i)_4``, ``C = (i,(i,i)_2)_4``
  are the classical Clebsch invariants via transvectants;
* ``I2 = -120*A``, ``I4 = -720*A^2 + 6750*B``,
  ``I6 = 8640*A^3 - 108000*A*B + 202500*C``;
* ``I10`` is the discriminant of the sextic itself,
  ``disc(F) = -Res(F_x, F_z)/1296``, normalized so that
  ``disc(a0 * prod(x - r_i z)) = a0^10 * prod_{i<j}(r_i - r_j)^2``.

Weighted-projective comparison of tuples is independent of any fixed
weighted-homogeneous change of normalization, so downstream equality
checks do not depend on these constants.  Characteristics 2, 3, 5 are
rejected: the transvectant prefactors and the Clebsch constants need
1/6! and 1/2,1/3,1/5 to exist.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import BurkhardtError, CharacteristicError
from .fields import Field
from .poly import MultiPoly


def binary_coeffs(F: MultiPoly, degree: int, x: str = "x", z: str = "z"):
    """Coefficients [c_0..c_degree] with c_i multiplying x^(degree-i) z^i."""
    xi = F.vars.index(x)
    zi = F.vars.index(z)
    out = [F.field.zero] * (degree + 1)
    for e, c in F.terms.items():
        for j, ej in enumerate(e):
            if j not in (xi, zi) and ej:
                raise BurkhardtError("form involves extra variables")
        if e[xi] + e[zi] != degree:
            raise BurkhardtError(f"form is not homogeneous of degree {degree}")
        out[e[zi]] = c
    return out


def binary_form(field: Field, coeffs, x: str = "x", z: str = "z") -> MultiPoly:
    """Build sum(c_i x^(d-i) z^i) from a coefficient list."""
    d = len(coeffs) - 1
    variables = (x, z)
    terms = {}
    for i, c in enumerate(coeffs):
        c = field.coerce(c) if isinstance(c, (int, Fraction)) else c
        if c != field.zero:
            terms[(d - i, i)] = c
    return MultiPoly(field, variables, terms)


def transvectant(f: MultiPoly, g: MultiPoly, m: int, n: int, r: int) -> MultiPoly:
    """The r-th transvectant of binary forms of degrees m and n."""
    field = f.field
    if field.p in (2, 3, 5):
        raise CharacteristicError("transvectants need characteristic 0 or >= 7")
    x, z = f.vars
    pref = Fraction(factorial(m - r) * factorial(n - r),
                    factorial(m) * factorial(n))
    total = MultiPoly.zero(field, f.vars)
    for j in range(r + 1):
        df = f
        for _ in range(r - j):
            df = df.derivative(x)
        for _ in range(j):
            df = df.derivative(z)
        dg = g
        for _ in range(j):
            dg = dg.derivative(x)
        for _ in range(r - j):
            dg = dg.derivative(z)
        piece = (df * dg).scale(comb(r, j))
        total = total + piece if j % 2 == 0 else total - piece
    return total.scale(pref)


def sylvester_resultant(u, v, field: Field):
    """Resultant of two binary forms given by full coefficient lists.

    The lists fix the formal degrees, so the result is the honest binary
    resultant even when leading entries vanish.
    """
    m = len(u) - 1
    n = len(v) - 1
    size = m + n
    rows = []
    for i in range(n):
        row = [field.zero] * size
        for j, c in enumerate(u):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [field.zero] * size
        for j, c in enumerate(v):
            row[i + j] = c
        rows.append(row)
    return _field_det(field, rows)


def _field_det(field: Field, rows):
    """Fraction-free-ish Gaussian determinant over an exact field."""
    n = len(rows)
    rows = [list(r) for r in rows]
    det = field.one
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if rows[r][col] != field.zero:
                pivot = r
                break
        if pivot is None:
            return field.zero
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = field.neg(det)
        pv = rows[col][col]
        det = field.mul(det, pv)
        inv = field.inv(pv)
        for r in range(col + 1, n):
            if rows[r][col] != field.zero:
                factor = field.mul(rows[r][col], inv)
                rows[r] = [field.sub(a, field.mul(factor, b))
                           for a, b in zip(rows[r], rows[col])]
    return det


def binary_discriminant(F: MultiPoly, x: str = "x", z: str = "z"):
    """disc(F) for a binary sextic, valid in characteristic 0 or >= 5."""
    field = F.field
    if field.p in (2, 3):
        raise CharacteristicError("sextic discriminant needs characteristic >= 5")
    Fx = F.derivative(x)
    Fz = F.derivative(z)
    u = binary_coeffs(Fx, 5, x, z)
    v = binary_coeffs(Fz, 5, x, z)
    res = sylvester_resultant(u, v, field)
    scale = field.inv(field.coerce(-1296))
    return field.mul(res, scale)


@dataclass(frozen=True)
class IgusaClebsch:
    """Weight-(2,4,6,10) invariants of a binary sextic over a field."""

    field: Field
    I2: object
    I4: object
    I6: object
    I10: object

    def as_tuple(self):
        return (self.I2, self.I4, self.I6, self.I10)

    WEIGHTS = (2, 4, 6, 10)


def igusa_clebsch(F: MultiPoly, x: str = "x", z: str = "z") -> IgusaClebsch:
    """Igusa-Clebsch invariants in the normalization documented above."""
    field = F.field
    if field.p in (2, 3, 5):
        raise CharacteristicError(
            "Igusa-Clebsch invariants need characteristic 0 or >= 7")
    if F.degree() != 6 or not F.is_homogeneous():
        raise BurkhardtError("input must be a binary sextic")
    if tuple(F.vars) != (x, z):
        F = F.with_vars((x, z))
    i4 = transvectant(F, F, 6, 6, 4)
    delta = transvectant(i4, i4, 4, 4, 2)
    A = transvectant(F, F, 6, 6, 6).constant_value()
    B = transvectant(i4, i4, 4, 4, 4).constant_value()
    C = transvectant(i4, delta, 4, 4, 4).constant_value()
    c = field.coerce
    mul = field.mul
    I2 = mul(c(-120), A)
    A2 = mul(A, A)
    I4 = field.add(mul(c(-720), A2), mul(c(6750), B))
    I6 = field.add(
        field.add(mul(c(8640), mul(A2, A)), mul(c(-108000), mul(A, B))),
        mul(c(202500), C))
    I10 = binary_discriminant(F, x, z)
    return IgusaClebsch(field, I2, I4, I6, I10)


def igusa_weighted_equal(a: IgusaClebsch, b: IgusaClebsch) -> bool:
    """Equality in weighted projective space P(2,4,6,10).

    Decided without root extraction: the vanishing patterns must agree,
    and every pair of jointly nonzero invariants must satisfy the
    homogeneous cross-equality
    ``Ij(a)^(wk/g) * Ik(b)^(wj/g) == Ik(a)^(wj/g) * Ij(b)^(wk/g)`` with
    ``g = gcd(wj, wk)``.  Over an algebraically closed field this is
    equivalent to the existence of c with b = (c^2 I2, c^4 I4, c^6 I6,
    c^10 I10); vanishing invariants impose no further constraint since
    c is a unit.
    """
    if a.field != b.field:
        raise BurkhardtError("invariants over different fields")
    from math import gcd
    field = a.field
    ta, tb = a.as_tuple(), b.as_tuple()
    weights = IgusaClebsch.WEIGHTS
    zero = field.zero
    for va, vb in zip(ta, tb):
        if (va == zero) != (vb == zero):
            return False
    idx = [i for i in range(4) if ta[i] != zero]
    for ii in range(len(idx)):
        for jj in range(ii + 1, len(idx)):
            j, k = idx[ii], idx[jj]
            g = gcd(weights[j], weights[k])
            ej = weights[j] // g
            ek = weights[k] // g
            lhs = field.mul(field.pow(ta[j], ek), field.pow(tb[k], ej))
            rhs = field.mul(field.pow(ta[k], ej), field.pow(tb[j], ek))
            if lhs != rhs:
                return False
    return True

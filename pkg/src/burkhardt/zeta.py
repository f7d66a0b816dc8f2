"""Zeta functions of the quartic: closed forms, brute-force counts, and
the calculus used to assemble them.

A :class:`ZetaFunction` is a finite factor list for
``prod_i (1 - c_i T^{d_i})^(-e_i)`` with integer ``c_i`` and ``e_i``;
``d_i`` is 1 except for the quadratic factors produced by conjugate
pairs, which carry the even-index count rule
``#X(F_{q^n}) += d * e * c^(n/d)`` when ``d | n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .counting import count_projective_zeros, scan_projective
from .errors import BurkhardtError, CharacteristicError, ScanCapError
from .fields import field_make, field_for_order
from .poly import MultiPoly
from .quartic import burkhardt_form, hessian_form

DEFAULT_COUNT_CAP = 1 << 16


def epsilon(q: int) -> int:
    """+1 for q = 1 mod 3, -1 for q = 2 mod 3; rejects multiples of 3."""
    r = q % 3
    if r == 1:
        return 1
    if r == 2:
        return -1
    raise CharacteristicError("epsilon is undefined when 3 divides q")


@dataclass(frozen=True)
class ZetaFunction:
    """Normalized factor list; equal lists mean equal rational functions."""

    factors: tuple[tuple[int, int, int], ...]  # (c, d, e)

    @classmethod
    def from_factors(cls, factors) -> "ZetaFunction":
        merged: dict[tuple[int, int], int] = {}
        for item in factors:
            if len(item) == 2:
                c, e = item
                d = 1
            else:
                c, d, e = item
            if d not in (1, 2):
                raise BurkhardtError("factor powers are limited to T and T^2")
            merged[(c, d)] = merged.get((c, d), 0) + e
        kept = tuple(sorted(
            (c, d, e) for (c, d), e in merged.items() if e != 0))
        return cls(kept)

    @classmethod
    def one(cls) -> "ZetaFunction":
        return cls(())

    def count(self, n: int) -> int:
        """#X(F_{q^n}) recovered from the factor list."""
        if n < 1:
            raise BurkhardtError("counts exist for n >= 1")
        total = 0
        for c, d, e in self.factors:
            if n % d == 0:
                total += d * e * c ** (n // d)
        return total

    def __mul__(self, other: "ZetaFunction") -> "ZetaFunction":
        return ZetaFunction.from_factors(self.factors + other.factors)

    def __truediv__(self, other: "ZetaFunction") -> "ZetaFunction":
        inverted = tuple((c, d, -e) for c, d, e in other.factors)
        return ZetaFunction.from_factors(self.factors + inverted)

    def __pow__(self, k: int) -> "ZetaFunction":
        return ZetaFunction.from_factors(
            tuple((c, d, e * k) for c, d, e in self.factors))

    def denominator_factors(self):
        return tuple(f for f in self.factors if f[2] > 0)

    def numerator_factors(self):
        return tuple(f for f in self.factors if f[2] < 0)

    def as_pairs(self):
        """JSON form: [c, e] for linear factors, [c, e, 2] for T^2 ones."""
        out = []
        for c, d, e in self.factors:
            out.append([c, e] if d == 1 else [c, e, d])
        return out


def point_count_from_zeta(z: ZetaFunction, n: int) -> int:
    return z.count(n)


def zeta_pn(n: int, q: int) -> ZetaFunction:
    """Zeta of projective n-space over F_q."""
    return ZetaFunction.from_factors([(q ** i, 1, 1) for i in range(n + 1)])


def zeta_affine(n: int, q: int) -> ZetaFunction:
    return ZetaFunction.from_factors([(q ** n, 1, 1)])


def conjugate_pair(z: ZetaFunction) -> ZetaFunction:
    """Zeta over F_q of a disjoint pair conjugate over F_{q^2}.

    Substitutes T -> T^2 in a zeta function over F_{q^2}; factors
    (1 - c T^2) split into (1 - sqrt(c) T)(1 + sqrt(c) T) whenever c is a
    perfect square, and otherwise stay quadratic with the even-n count
    rule.
    """
    out = []
    for c, d, e in z.factors:
        if d != 1:
            raise BurkhardtError("conjugate pairs of quadratic factors not supported")
        if c >= 0 and isqrt(c) ** 2 == c:
            s = isqrt(c)
            out.append((s, 1, e))
            out.append((-s, 1, e))
        else:
            out.append((c, 2, e))
    return ZetaFunction.from_factors(out)


def zeta_burkhardt(q: int) -> ZetaFunction:
    """Closed-form zeta of the quartic threefold over F_q (3 not dividing q)."""
    eps = epsilon(q)
    return ZetaFunction.from_factors([
        (1, 1, 1),
        (q ** 2, 1, 10),
        (eps * q ** 2, 1, 6),
        (q ** 3, 1, 1),
        (q, 1, -15),
        (eps * q, 1, -14),
    ])


def zeta_desing(q: int) -> ZetaFunction:
    """Closed-form zeta of the blow-up of the 45 nodes."""
    eps = epsilon(q)
    return ZetaFunction.from_factors([
        (1, 1, 1),
        (q, 1, 36),
        (eps * q, 1, 25),
        (eps * q ** 2, 1, 25),
        (q ** 2, 1, 36),
        (q ** 3, 1, 1),
    ])


def node_blowup_correction(q: int) -> ZetaFunction:
    """Per-node exceptional-quadric corrections for the blow-up.

    Over fields with eps = +1 all 45 nodes are rational with split
    tangent cones: each contributes 1/((1-qT)^2 (1-q^2 T)).  Otherwise
    there are 19 conjugate node pairs (handled via the T -> T^2 rule on
    the split correction over F_{q^2}), 6 rational split nodes, and one
    rational node with a non-split cone contributing
    1/((1+qT)(1-qT)(1-q^2T)).
    """
    eps = epsilon(q)
    if eps == 1:
        per_node = ZetaFunction.from_factors([(q, 1, 2), (q ** 2, 1, 1)])
        return per_node ** 45
    split = ZetaFunction.from_factors([(q, 1, 2), (q ** 2, 1, 1)])
    nonsplit = ZetaFunction.from_factors([(-q, 1, 1), (q, 1, 1), (q ** 2, 1, 1)])
    pair_over_q2 = ZetaFunction.from_factors([(q ** 2, 1, 2), (q ** 4, 1, 1)])
    pair = conjugate_pair(pair_over_q2)
    return (pair ** 19) * (split ** 6) * nonsplit


def verify_desing_correction(q: int) -> bool:
    """Exact factor-list identity: blow-up zeta = quartic zeta x corrections."""
    return zeta_desing(q) == zeta_burkhardt(q) * node_blowup_correction(q)


# ---------------------------------------------------------------------------
# brute-force counting
# ---------------------------------------------------------------------------

def count_hypersurface(F: MultiPoly, q: int, n: int = 1,
                       cap: int = DEFAULT_COUNT_CAP) -> int:
    """#{x in P^4(F_{q^n}) : F(x) = 0} by exhaustive (stratified) scan.

    Refuses q^n above the cap; the quartic itself is additionally kept
    feasible by a fibered count over the last coordinate.
    """
    if len(F.vars) != 5:
        raise BurkhardtError("hypersurface counting here is for P^4")
    qn = q ** n
    if qn > cap:
        raise ScanCapError(f"q^n = {qn} exceeds the counting cap {cap}")
    field = field_for_order(qn)
    if field.p == 3 and _is_burkhardt(F):
        raise CharacteristicError("quartic counts require characteristic != 3")
    return count_projective_zeros(F.map_field(field), field, 4)


def _is_burkhardt(F: MultiPoly) -> bool:
    b = burkhardt_form()
    return F.vars == b.vars and F.field == b.field and F.terms == b.terms


def count_burkhardt(q: int, n: int = 1, cap: int = DEFAULT_COUNT_CAP) -> int:
    if (q ** n) % 3 == 0:
        raise CharacteristicError("3 divides q")
    return count_hypersurface(burkhardt_form(), q, n, cap=cap)


def off_hessian_count(q: int, mode: str = "formula") -> int:
    """#(B minus Hessian)(F_q), by closed formula or exhaustive scan."""
    eps = epsilon(q)
    if mode == "formula":
        if eps == 1:
            return (q - 4) * (q - 7) * (q - 13)
        return (q - 2) * (q * q - 2 * q - 1)
    if mode == "brute":
        field = field_for_order(q)
        return scan_projective([burkhardt_form(), hessian_form()], field, 4,
                               mode="zero_nonzero")
    raise BurkhardtError('mode must be "formula" or "brute"')


def hessian_intersection_count(q: int) -> int:
    """#(B intersect Hessian)(F_q) by direct scan of {f = He = 0}."""
    field = field_for_order(q)
    if field.p == 3:
        raise CharacteristicError("3 divides q")
    return scan_projective([burkhardt_form(), hessian_form()], field, 4,
                           mode="all_zero")


# ---------------------------------------------------------------------------
# inclusion-exclusion over an intersection-closed family
# ---------------------------------------------------------------------------

def solve_inclusion_exclusion(containment) -> list[int]:
    """Solve (e_1,...,e_m) M = (1,...,1) over the integers.

    ``containment[i][j]`` is 1 when component j is contained in
    component i.  The family must be closed under intersection, which
    makes M invertible; a singular or non-integral system is an error.
    """
    m = len(containment)
    for row in containment:
        if len(row) != m:
            raise BurkhardtError("containment matrix must be square")
    # solve M^T e^T = 1 by exact Gaussian elimination over Q
    aug = [[Fraction(containment[i][j]) for i in range(m)] + [Fraction(1)]
           for j in range(m)]
    for col in range(m):
        pivot = None
        for r in range(col, m):
            if aug[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            raise BurkhardtError("containment system is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(m):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    exponents = []
    for r in range(m):
        val = aug[r][m]
        if val.denominator != 1:
            raise BurkhardtError("inclusion-exclusion system not solvable over Z")
        exponents.append(int(val))
    return exponents


def inclusion_exclusion(containment, zetas) -> tuple[list[int], ZetaFunction]:
    """Exponent vector and assembled zeta of a union of components."""
    if len(zetas) != len(containment):
        raise BurkhardtError("need one zeta function per component")
    e = solve_inclusion_exclusion(containment)
    total = ZetaFunction.one()
    for zi, ei in zip(zetas, e):
        total = total * (zi ** ei)
    return e, total

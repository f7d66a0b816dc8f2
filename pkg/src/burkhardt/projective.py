"""Points and linear subspaces of projective space over an exact field.

Points are stored with normalized homogeneous coordinates (first nonzero
coordinate equal to 1), so equality and hashing are structural.  Linear
subspaces carry a reduced-row-echelon basis for the same reason.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BurkhardtError
from .fields import Field, as_element


def _coerce_coords(field, coords):
    return tuple(as_element(field, x) for x in coords)


class ProjPoint:
    """A point of P^n with canonical normalized coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field: Field, coords, normalized=False):
        coords = _coerce_coords(field, coords)
        if normalized:
            self.field = field
            self.coords = coords
            return
        zero = field.zero
        pivot = None
        for x in coords:
            if x != zero:
                pivot = x
                break
        if pivot is None:
            raise BurkhardtError("projective point needs a nonzero coordinate")
        inv = field.inv(pivot)
        self.field = field
        self.coords = tuple(field.mul(x, inv) for x in coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self):
        return hash((self.field, self.coords))

    def __str__(self):
        return "(" + ":".join(str(c) for c in self.coords) + ")"

    __repr__ = __str__


def rref(field: Field, rows):
    """Reduced row echelon form over ``field``; returns the nonzero rows."""
    rows = [list(r) for r in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    zero = field.zero
    pivot_row = 0
    for col in range(ncols):
        pivot = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col] != zero:
                pivot = r
                break
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        inv = field.inv(rows[pivot_row][col])
        rows[pivot_row] = [field.mul(x, inv) for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] != zero:
                factor = rows[r][col]
                rows[r] = [field.sub(x, field.mul(factor, y))
                           for x, y in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return [tuple(r) for r in rows[:pivot_row] if any(x != zero for x in r)]


def matrix_rank(field: Field, rows) -> int:
    return len(rref(field, rows))


def kernel_basis(field: Field, rows):
    """Basis of the right kernel of the matrix given by ``rows``."""
    if not rows:
        raise BurkhardtError("kernel of an empty matrix is ambiguous")
    ncols = len(rows[0])
    red = rref(field, rows)
    pivots = []
    for r in red:
        for i, x in enumerate(r):
            if x != field.zero:
                pivots.append(i)
                break
    free = [i for i in range(ncols) if i not in pivots]
    basis = []
    for fcol in free:
        vec = [field.zero] * ncols
        vec[fcol] = field.one
        for r, pcol in zip(red, pivots):
            vec[pcol] = field.neg(r[fcol])
        basis.append(tuple(vec))
    return basis


class LinearSubspace:
    """A linear subspace of P^n as the row span of a basis matrix."""

    __slots__ = ("field", "basis")

    def __init__(self, field: Field, rows):
        rows = [_coerce_coords(field, r) for r in rows]
        basis = rref(field, rows)
        if not basis:
            raise BurkhardtError("subspace needs at least one nonzero row")
        if len(basis) != len(rows):
            raise BurkhardtError("basis rows are linearly dependent")
        self.field = field
        self.basis = tuple(basis)

    @property
    def dim(self) -> int:
        """Projective dimension."""
        return len(self.basis) - 1

    @property
    def ambient_dim(self) -> int:
        return len(self.basis[0]) - 1

    def contains(self, point: ProjPoint) -> bool:
        rows = list(self.basis) + [point.coords]
        return matrix_rank(self.field, rows) == len(self.basis)

    def points(self):
        """All points of the subspace over a finite field."""
        from .counting import projective_points
        k = len(self.basis)
        field = self.field
        for coeffs in projective_points(field, k - 1):
            vec = [field.zero] * (self.ambient_dim + 1)
            for c, row in zip(coeffs, self.basis):
                if c != field.zero:
                    vec = [field.add(v, field.mul(c, x)) for v, x in zip(vec, row)]
            yield ProjPoint(field, vec)

    def __eq__(self, other):
        if not isinstance(other, LinearSubspace):
            return NotImplemented
        return self.field == other.field and self.basis == other.basis

    def __hash__(self):
        return hash((self.field, self.basis))

    def __repr__(self):
        return f"LinearSubspace(dim={self.dim}, basis={self.basis})"


def hyperplane(field: Field, coeffs) -> LinearSubspace:
    """The hyperplane sum(coeffs[i] * x_i) = 0 as a subspace."""
    coeffs = _coerce_coords(field, coeffs)
    if all(c == field.zero for c in coeffs):
        raise BurkhardtError("hyperplane needs a nonzero coefficient vector")
    return LinearSubspace(field, kernel_basis(field, [coeffs]))


def parse_point(text: str, field: Field) -> ProjPoint:
    """Parse colon-separated homogeneous coordinates like ``1:2:0:3:4``."""
    parts = [p.strip() for p in text.split(":")]
    coords = []
    for p in parts:
        if "/" in p:
            num, den = p.split("/")
            coords.append(Fraction(int(num), int(den)))
        else:
            coords.append(int(p))
    return ProjPoint(field, coords)

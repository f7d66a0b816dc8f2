"""Exhaustive enumeration and zero-counting over projective space.

Points of P^n(F_q) are enumerated through the canonical normalization
(first nonzero coordinate equal to 1), in lexicographic order on the
normalized coordinate tuples.  Counting large strata is vectorized with
numpy using table arithmetic; a monic root-count table over the last
coordinate handles hypersurfaces of fiber degree at most 3, which is what
keeps quartic counts over fields of a few hundred elements at desk scale.

Scans can be partitioned across processes by setting BURKHARDT_WORKERS;
results are aggregated in enumeration order, so the worker count never
changes any output.
"""

from __future__ import annotations

import os
from multiprocessing import get_context

import numpy as np

from .errors import BurkhardtError, ScanCapError
from .fields import Field
from .poly import MultiPoly

FULL_ENUM_LIMIT = 40_000_000  # points we are willing to enumerate outright
FIBER_Q_LIMIT = 512           # root-count tables are cubic in q
TABLE_Q_LIMIT = 1024          # pairwise op tables are quadratic in q
CHUNK = 1 << 21


def workers_from_env() -> int:
    try:
        w = int(os.environ.get("BURKHARDT_WORKERS", "1"))
    except ValueError:
        return 1
    return max(w, 1)


# ---------------------------------------------------------------------------
# plain python enumeration
# ---------------------------------------------------------------------------

def projective_points(field: Field, dim: int):
    """All points of P^dim(F_q) as normalized coordinate tuples.

    Order is lexicographic on the tuples, i.e. strata with more leading
    zeros come first.
    """
    if field.order is None:
        raise BurkhardtError("cannot enumerate points over the rationals")
    q = field.order
    one = field.one
    zero = field.zero
    for lead in range(dim, -1, -1):
        nfree = dim - lead
        prefix = (zero,) * lead + (one,)
        for idx in range(q ** nfree):
            coords = []
            for j in range(nfree):
                coords.append(idx // q ** (nfree - 1 - j) % q)
            yield prefix + tuple(coords)


class PolyEvaluator:
    """Repeated exact evaluation of one polynomial over a finite field."""

    def __init__(self, poly: MultiPoly, field: Field):
        if poly.field != field:
            poly = poly.map_field(field)
        self.field = field
        q = field.order
        maxes = [0] * len(poly.vars)
        for e in poly.terms:
            for i, ei in enumerate(e):
                maxes[i] = max(maxes[i], ei)
        maxe = max(maxes, default=0)
        # pow_tab[e][v] = v^e for every field element v
        self.pow_tab = [[field.pow(v, e) for v in range(q)] for e in range(maxe + 1)]
        self.terms = [
            (c, [(i, ei) for i, ei in enumerate(e) if ei])
            for e, c in poly.terms.items()
        ]

    def at(self, coords) -> int:
        field = self.field
        add = field.add
        mul = field.mul
        pow_tab = self.pow_tab
        total = field.zero
        for c, factors in self.terms:
            acc = c
            for i, e in factors:
                acc = mul(acc, pow_tab[e][coords[i]])
            total = add(total, acc)
        return total


def _scan_python(polys, field, dim, mode, collect):
    evals = [PolyEvaluator(p, field) for p in polys]
    count = 0
    points = [] if collect else None
    for coords in projective_points(field, dim):
        v0 = evals[0].at(coords)
        if v0 != field.zero:
            continue
        if mode == "all_zero":
            ok = all(ev.at(coords) == field.zero for ev in evals[1:])
        elif mode == "zero_nonzero":
            ok = evals[1].at(coords) != field.zero
        else:
            raise BurkhardtError(f"unknown scan mode {mode!r}")
        if ok:
            count += 1
            if collect:
                points.append(coords)
    return (count, points) if collect else (count, None)


# ---------------------------------------------------------------------------
# numpy table arithmetic
# ---------------------------------------------------------------------------

class VectorOps:
    """Vectorized field arithmetic on integer-encoded element arrays."""

    def __init__(self, field: Field):
        if field.order is None:
            raise BurkhardtError("vector arithmetic needs a finite field")
        self.field = field
        self.q = field.order
        self.p = field.p
        self.prime = field.k == 1
        self._pow_cache: dict[int, np.ndarray] = {}
        if not self.prime:
            if self.q > TABLE_Q_LIMIT:
                raise ScanCapError(
                    f"extension field of order {self.q} exceeds the table limit")
            q = self.q
            mul_t = np.zeros((q, q), dtype=np.int64)
            add_t = np.zeros((q, q), dtype=np.int64)
            for a in range(q):
                for b in range(a, q):
                    m = field.mul(a, b)
                    s = field.add(a, b)
                    mul_t[a, b] = mul_t[b, a] = m
                    add_t[a, b] = add_t[b, a] = s
            self.mul_t = mul_t
            self.add_t = add_t
            self.neg_t = np.array([field.neg(a) for a in range(q)], dtype=np.int64)
            inv = np.zeros(q, dtype=np.int64)
            for a in range(1, q):
                inv[a] = field.inv(a)
            self.inv_t = inv
        else:
            inv = np.zeros(self.q, dtype=np.int64)
            for a in range(1, self.q):
                inv[a] = field.inv(a)
            self.inv_t = inv

    def add(self, a, b):
        if self.prime:
            return (a + b) % self.p
        return self.add_t[a, b]

    def mul(self, a, b):
        if self.prime:
            return a * b % self.p
        return self.mul_t[a, b]

    def neg(self, a):
        if self.prime:
            return (-a) % self.p
        return self.neg_t[a]

    def inv(self, a):
        return self.inv_t[a]

    def pow_table(self, e: int) -> np.ndarray:
        tab = self._pow_cache.get(e)
        if tab is None:
            tab = np.array([self.field.pow(v, e) for v in range(self.q)],
                           dtype=np.int64)
            self._pow_cache[e] = tab
        return tab

    def eval_poly(self, poly: MultiPoly, cols) -> np.ndarray:
        """Evaluate on arrays of encoded elements, one array per variable."""
        n = len(cols[0]) if cols else 0
        acc = None
        for e, c in poly.terms.items():
            term = np.full(n, c, dtype=np.int64)
            for i, ei in enumerate(e):
                if ei:
                    term = self.mul(term, self.pow_table(ei)[cols[i]])
            acc = term if acc is None else self.add(acc, term)
        if acc is None:
            return np.zeros(n, dtype=np.int64)
        return acc


_VOPS_CACHE: dict = {}


def vector_ops(field: Field) -> VectorOps:
    ops = _VOPS_CACHE.get(field)
    if ops is None:
        ops = VectorOps(field)
        _VOPS_CACHE[field] = ops
    return ops


def _digit_arrays(idx: np.ndarray, q: int, nfree: int):
    cols = []
    for j in range(nfree):
        cols.append(idx // q ** (nfree - 1 - j) % q)
    return cols


def _specialize_stratum(poly: MultiPoly, field: Field, lead: int):
    """Set the leading coordinates of the stratum: zeros then a one."""
    mapping = {poly.vars[i]: 0 for i in range(lead)}
    mapping[poly.vars[lead]] = 1
    return poly.substitute(mapping)


def _scan_stratum_numpy(polys, field, dim, lead, lo, hi, mode, collect):
    vops = vector_ops(field)
    q = field.order
    nfree = dim - lead
    specialized = [_specialize_stratum(p, field, lead) for p in polys]
    count = 0
    points = [] if collect else None
    if nfree == 0:
        vals = [p.evaluate_elems([field.zero] * (dim + 1)) for p in specialized]
        ok = vals[0] == field.zero
        if ok and mode == "all_zero":
            ok = all(v == field.zero for v in vals[1:])
        elif ok and mode == "zero_nonzero":
            ok = vals[1] != field.zero
        if ok and lo <= 0 < hi:
            count = 1
            if collect:
                points.append((field.zero,) * dim + (field.one,))
        return count, points
    pos = lo
    while pos < hi:
        stop = min(pos + CHUNK, hi)
        idx = np.arange(pos, stop, dtype=np.int64)
        digits = _digit_arrays(idx, q, nfree)
        # full coordinate columns: zeros, one, then the free digits
        zeros_col = np.zeros(stop - pos, dtype=np.int64)
        ones_col = np.full(stop - pos, field.one, dtype=np.int64)
        cols = [zeros_col] * lead + [ones_col] + digits
        vals = [vops.eval_poly(p, cols) for p in specialized]
        mask = vals[0] == 0
        if mode == "all_zero":
            for v in vals[1:]:
                mask &= v == 0
        elif mode == "zero_nonzero":
            mask &= vals[1] != 0
        else:
            raise BurkhardtError(f"unknown scan mode {mode!r}")
        count += int(mask.sum())
        if collect:
            hits = idx[mask]
            for h in hits.tolist():
                coords = tuple(
                    int(h // q ** (nfree - 1 - j) % q) for j in range(nfree))
                points.append((field.zero,) * lead + (field.one,) + coords)
        pos = stop
    return count, points


def _scan_task(args):
    return _scan_stratum_numpy(*args)


def scan_projective(polys, field: Field, dim: int, mode="all_zero",
                    collect=False):
    """Count (or collect) points of P^dim where the scan condition holds.

    mode "all_zero": every polynomial vanishes.
    mode "zero_nonzero": the first vanishes and the second does not.
    Collected points come back in enumeration order regardless of the
    worker count.
    """
    if field.order is None:
        raise BurkhardtError("cannot scan over the rationals")
    q = field.order
    total = (q ** (dim + 1) - 1) // (q - 1)
    if total > FULL_ENUM_LIMIT:
        raise ScanCapError(
            f"P^{dim}(F_{q}) has {total} points, beyond the enumeration limit")
    polys = [p if p.field == field else p.map_field(field) for p in polys]
    if field.k > 1 and field.order > TABLE_Q_LIMIT:
        count, points = _scan_python(polys, field, dim, mode, collect)
        return (count, points) if collect else count

    tasks = []
    for lead in range(dim, -1, -1):
        nfree = dim - lead
        span = q ** nfree
        nworkers = workers_from_env()
        step = max(span // nworkers, 1, CHUNK // 4) if nworkers > 1 else span
        lo = 0
        while lo < span:
            hi = min(lo + step, span)
            tasks.append((polys, field, dim, lead, lo, hi, mode, collect))
            lo = hi

    nworkers = workers_from_env()
    if nworkers > 1 and len(tasks) > 1:
        with get_context("fork").Pool(nworkers) as pool:
            results = pool.map(_scan_task, tasks)
    else:
        results = [_scan_task(t) for t in tasks]

    count = sum(r[0] for r in results)
    if collect:
        points = []
        for r in results:
            points.extend(r[1])
        return count, points
    return count


# ---------------------------------------------------------------------------
# fiber counting: hypersurface zeros via root counts in the last variable
# ---------------------------------------------------------------------------

_ROOT_TABLE_CACHE: dict = {}


def _monic_root_tables(field: Field, degree: int):
    """Tables R[coeff word] = number of roots of the monic polynomial."""
    key = (field, degree)
    got = _ROOT_TABLE_CACHE.get(key)
    if got is not None:
        return got
    vops = vector_ops(field)
    q = field.order
    if degree == 2:
        # y^2 + m1*y + m0 = 0  <=>  m0 = -(y + m1)*y.  For fixed y the
        # index map m1 -> (m1, m0) is injective, so fancy-index += is safe.
        table = np.zeros(q * q, dtype=np.int64)
        m1 = np.arange(q, dtype=np.int64)
        for y in range(q):
            m0 = vops.neg(vops.mul(vops.add(m1, y), y))
            table[m1 * q + m0] += 1
    elif degree == 3:
        table = np.zeros(q ** 3, dtype=np.int64)
        m2 = np.repeat(np.arange(q, dtype=np.int64), q)
        m1 = np.tile(np.arange(q, dtype=np.int64), q)
        prefix = (m2 * q + m1) * q
        for y in range(q):
            t = vops.mul(vops.add(m2, y), y)
            t = vops.mul(vops.add(t, m1), y)
            m0 = vops.neg(t)
            table[prefix + m0] += 1
    else:
        raise BurkhardtError("root tables exist for degrees 2 and 3 only")
    _ROOT_TABLE_CACHE[key] = table
    return table


def _count_roots_vec(field: Field, coeff_arrays):
    """Roots in F_q of c_d y^d + ... + c_0 for arrays of coefficients."""
    vops = vector_ops(field)
    q = field.order
    n = len(coeff_arrays[0])
    out = np.zeros(n, dtype=np.int64)
    remaining = np.ones(n, dtype=bool)
    coeffs = list(coeff_arrays)  # c_0 first
    degree = len(coeffs) - 1
    for d in range(degree, 0, -1):
        cd = coeffs[d]
        mask = remaining & (cd != 0)
        if mask.any():
            if d == 1:
                out[mask] = 1
            else:
                inv = vops.inv(cd[mask])
                word = np.zeros(int(mask.sum()), dtype=np.int64)
                for j in range(d - 1, -1, -1):
                    mj = vops.mul(coeffs[j][mask], inv)
                    word = word * q + mj
                table = _monic_root_tables(field, d)
                out[mask] = table[word]
        remaining &= ~mask
    if remaining.any():
        c0 = coeffs[0]
        everywhere = remaining & (c0 == 0)
        out[everywhere] = q
    return out


def count_projective_zeros_fiber(poly: MultiPoly, field: Field, dim: int) -> int:
    """Zero count of one hypersurface, fibered over the last coordinate.

    Requires the polynomial to have degree <= 3 in its last variable;
    each stratum then enumerates only q^(free-1) prefixes.
    """
    q = field.order
    if q > FIBER_Q_LIMIT:
        raise ScanCapError(f"fiber counting limited to q <= {FIBER_Q_LIMIT}")
    poly = poly if poly.field == field else poly.map_field(field)
    last = poly.vars[dim]
    if poly.degree_in(last) > 3:
        raise BurkhardtError("fiber method needs degree <= 3 in the last variable")
    vops = vector_ops(field)
    total = 0
    for lead in range(dim, -1, -1):
        nfree = dim - lead
        spec = _specialize_stratum(poly, field, lead)
        if nfree == 0:
            if spec.evaluate_elems([field.zero] * (dim + 1)) == field.zero:
                total += 1
            continue
        # split into coefficient polynomials of the last variable
        dlast = max(spec.degree_in(last), 0)
        li = spec.vars.index(last)
        coeff_polys = []
        for d in range(dlast + 1):
            terms = {}
            for e, c in spec.terms.items():
                if e[li] == d:
                    terms[e[:li] + (0,) + e[li + 1:]] = c
            coeff_polys.append(MultiPoly(field, spec.vars, terms))
        nprefix = nfree - 1
        span = q ** nprefix
        pos = 0
        while pos < span:
            stop = min(pos + CHUNK, span)
            idx = np.arange(pos, stop, dtype=np.int64)
            digits = _digit_arrays(idx, q, nprefix)
            zeros_col = np.zeros(stop - pos, dtype=np.int64)
            ones_col = np.full(stop - pos, field.one, dtype=np.int64)
            cols = [zeros_col] * lead + [ones_col] + digits + [zeros_col]
            coeff_arrays = [vops.eval_poly(cp, cols) for cp in coeff_polys]
            total += int(_count_roots_vec(field, coeff_arrays).sum())
            pos = stop
    return total


def count_projective_zeros(poly: MultiPoly, field: Field, dim: int) -> int:
    """Exact #{x in P^dim(F_q) : poly(x) = 0}, choosing a feasible method."""
    q = field.order
    if q is None:
        raise BurkhardtError("cannot count over the rationals")
    total = (q ** (dim + 1) - 1) // (q - 1)
    if total <= FULL_ENUM_LIMIT:
        return scan_projective([poly], field, dim, mode="all_zero")
    last = poly.vars[dim]
    if poly.degree_in(last) <= 3 and q <= FIBER_Q_LIMIT:
        return count_projective_zeros_fiber(poly, field, dim)
    raise ScanCapError(
        f"counting over P^{dim}(F_{q}) is beyond desk scale for this polynomial")


def count_projective_zeros_python(poly: MultiPoly, field: Field, dim: int) -> int:
    """Reference implementation: plain stratified scan, no numpy."""
    count, _ = _scan_python([poly if poly.field == field else poly.map_field(field)],
                            field, dim, "all_zero", False)
    return count

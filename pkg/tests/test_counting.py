import os
import subprocess
import sys

import pytest

from burkhardt.counting import (count_projective_zeros,
                                count_projective_zeros_fiber,
                                count_projective_zeros_python,
                                projective_points, scan_projective,
                                vector_ops)
from burkhardt.errors import ScanCapError
from burkhardt.fields import QQ, field_for_order, field_make
from burkhardt.poly import parse_poly
from burkhardt.quartic import burkhardt_form


def test_projective_point_counts_and_order():
    F3 = field_make(3)
    pts = list(projective_points(F3, 2))
    assert len(pts) == 13  # 9 + 3 + 1
    assert pts == sorted(pts)  # lexicographic on normalized tuples
    assert len(set(pts)) == len(pts)
    assert pts[0] == (0, 0, 1)


def test_hyperplane_count():
    F2 = field_make(2)
    y0 = parse_poly("y0", ("y0", "y1", "y2", "y3", "y4"), QQ)
    assert count_projective_zeros(y0.map_field(F2), F2, 4) == 15


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 9])
def test_numpy_matches_python_scan(q):
    field = field_for_order(q)
    vars5 = ("y0", "y1", "y2", "y3", "y4")
    polys = [
        "y0*y1 - y2*y3",
        "y0^3 + y1^3 + y4^3",
        "y0^2*y4 + 2*y1*y2*y3 - y4^3",
    ]
    for text in polys:
        p = parse_poly(text, vars5, QQ).map_field(field)
        assert (count_projective_zeros(p, field, 4)
                == count_projective_zeros_python(p, field, 4))


@pytest.mark.parametrize("q", [2, 5, 8, 9])
def test_fiber_matches_full_enumeration(q):
    field = field_for_order(q)
    f = burkhardt_form().map_field(field)
    full = scan_projective([f], field, 4, mode="all_zero")
    fiber = count_projective_zeros_fiber(f, field, 4)
    assert full == fiber


def test_root_tables_by_exhaustion():
    from burkhardt.counting import _monic_root_tables
    for q in (5, 8):
        field = field_for_order(q)
        t2 = _monic_root_tables(field, 2)
        t3 = _monic_root_tables(field, 3)
        for m1 in range(q):
            for m0 in range(q):
                expected = sum(
                    1 for y in range(q)
                    if field.add(field.add(field.mul(y, y),
                                           field.mul(m1, y)), m0) == 0)
                assert t2[m1 * q + m0] == expected
        # cubic spot checks
        import random
        rng = random.Random(q)
        for _ in range(30):
            m2, m1, m0 = (rng.randrange(q) for _ in range(3))
            expected = 0
            for y in range(q):
                val = field.add(
                    field.mul(field.add(field.mul(field.add(y, m2), y), m1), y),
                    m0)
                expected += val == 0
            assert t3[(m2 * q + m1) * q + m0] == expected


def test_scan_collect_matches_enumeration_order():
    field = field_make(3)
    vars3 = ("y0", "y1", "y2")
    p = parse_poly("y0*y2 - y1^2", vars3, QQ).map_field(field)
    count, pts = scan_projective([p], field, 2, mode="all_zero", collect=True)
    assert count == len(pts) == 4  # a smooth conic has q+1 points
    manual = [c for c in projective_points(field, 2)
              if p.evaluate_elems(c) == 0]
    assert pts == manual


def test_zero_nonzero_mode():
    field = field_make(3)
    vars3 = ("y0", "y1", "y2")
    f = parse_poly("y0", vars3, QQ).map_field(field)
    g = parse_poly("y1", vars3, QQ).map_field(field)
    # y0 = 0 is a P^1 (4 points); y1 != 0 removes the single point (0:0:1)
    assert scan_projective([f, g], field, 2, mode="zero_nonzero") == 3


def test_scan_cap():
    field = field_make(257)
    f = burkhardt_form().map_field(field)
    with pytest.raises(ScanCapError):
        scan_projective([f], field, 4)


def test_worker_count_does_not_change_output():
    script = (
        "import json\n"
        "from burkhardt.counting import scan_projective\n"
        "from burkhardt.fields import field_make\n"
        "from burkhardt.quartic import burkhardt_form\n"
        "f = burkhardt_form()\n"
        "F = field_make(5)\n"
        "count, pts = scan_projective([f], F, 4, mode='all_zero', collect=True)\n"
        "print(json.dumps([count, pts[:5], pts[-5:]]))\n"
    )
    outputs = []
    for workers in ("1", "3"):
        env = dict(os.environ, BURKHARDT_WORKERS=workers)
        res = subprocess.run([sys.executable, "-c", script], env=env,
                             capture_output=True, text=True, check=True)
        outputs.append(res.stdout)
    assert outputs[0] == outputs[1]


def test_vector_ops_tables():
    F8 = field_for_order(8)
    ops = vector_ops(F8)
    import numpy as np
    a = np.arange(8)
    b = np.arange(8)[::-1].copy()
    got = ops.mul(a, b)
    for i in range(8):
        assert got[i] == F8.mul(int(a[i]), int(b[i]))
    got = ops.add(a, b)
    for i in range(8):
        assert got[i] == F8.add(int(a[i]), int(b[i]))

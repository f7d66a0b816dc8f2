import pytest

from burkhardt.errors import CharacteristicError
from burkhardt.fields import QQ, field_make
from burkhardt.poly import MultiPoly
from burkhardt.projective import ProjPoint
from burkhardt.quartic import (burkhardt_form, group_generators,
                               group_invariance_check, hessian_form,
                               jplane_labels, node_census, off_hessian_points,
                               polars, polars_symbolic, rational_jplanes,
                               steiner_primes)

YV = ("y0", "y1", "y2", "y3", "y4")


def test_burkhardt_form_shape():
    f = burkhardt_form()
    assert f.degree() == 4
    assert f.is_homogeneous()
    assert f.evaluate((0, 1, 1, 1, 1)) == 3  # 3*y1*y2*y3*y4 survives
    assert f.evaluate((-1, 1, 1, 1, 1)) == 0
    g = [f.derivative(v) for v in YV]
    assert all(gi.evaluate((-1, 1, 1, 1, 1)) == 0 for gi in g)


def test_steiner_prime_section():
    f = burkhardt_form()
    section = f.substitute({"y0": 0})
    expected = MultiPoly.gens(QQ, YV)
    assert section == 3 * expected[1] * expected[2] * expected[3] * expected[4]


def test_hessian_content_one_degree_ten():
    he = hessian_form()
    assert he.degree() == 10
    assert he.is_homogeneous()
    assert he.content() == 1


def _restrict_to_plane(form, plane):
    uvars = ("u1", "u2", "u3")
    gens = MultiPoly.gens(QQ, uvars)
    images = {}
    for i, v in enumerate(YV):
        acc = MultiPoly.zero(QQ, uvars)
        for g, row in zip(gens, plane.basis):
            acc = acc + g.scale(row[i])
        images[v] = acc
    return form.substitute(images)


def test_jplanes_lie_on_quartic_and_hessian():
    f = burkhardt_form()
    he = hessian_form()
    planes = rational_jplanes()
    assert len(planes) == 8
    for plane in planes:
        assert _restrict_to_plane(f, plane).is_zero()
        assert _restrict_to_plane(he, plane).is_zero()


def test_j1_j2_in_steiner_prime():
    planes = rational_jplanes()
    prime0, prime_sum = steiner_primes()
    for plane in planes[:4]:
        for row in plane.basis:
            assert prime0.contains(ProjPoint(QQ, row))
    for plane in planes[4:]:
        for row in plane.basis:
            assert prime_sum.contains(ProjPoint(QQ, row))


def test_characteristic_three_refused():
    with pytest.raises(CharacteristicError):
        rational_jplanes(field_make(3))
    with pytest.raises(CharacteristicError):
        node_census(3)
    with pytest.raises(CharacteristicError):
        node_census(9)


@pytest.mark.parametrize("q,expected", [(2, 7), (5, 7), (7, 45), (11, 7),
                                        (13, 45), (4, 45), (25, 45)])
def test_node_census_counts(q, expected):
    assert len(node_census(q)) == expected


def test_node_census_on_quartic_and_ordered():
    nodes = node_census(7)
    f = burkhardt_form().map_field(field_make(7))
    coords = [n.coords for n in nodes]
    assert coords == sorted(coords)
    for n in nodes:
        assert f.evaluate_elems(n.coords) == 0


@pytest.mark.parametrize("q", [7, 13])
def test_each_jplane_contains_nine_nodes(q):
    field = field_make(q)
    nodes = node_census(q)
    assert len(nodes) == 45
    for plane in rational_jplanes(field):
        inside = sum(1 for n in nodes if plane.contains(n))
        assert inside == 9


def test_polars_shapes_and_node_degeneracy():
    F7 = field_make(7)
    node = ProjPoint(F7, (-1, 1, 1, 1, 1))
    p1, p2, p3 = polars(node)
    assert p1.degree() == 3 and p2.degree() == 2
    assert p3.is_zero()  # tangent form dies exactly at nodes
    smooth = ProjPoint(F7, (-1, 1, -1, 0, 1))  # on the quartic, not a node
    f7 = burkhardt_form().map_field(F7)
    assert f7.evaluate_elems(smooth.coords) == 0
    assert smooth not in set(node_census(7))
    _, _, p3s = polars(smooth)
    assert not p3s.is_zero()


def test_polar_tangent_form_matches_gradient():
    F11 = field_make(11)
    alpha = ProjPoint(F11, (1, 2, 0, 3, 4))
    _, _, p3 = polars(alpha)
    f = burkhardt_form().map_field(F11)
    for i, v in enumerate(YV):
        grad = f.derivative(v).evaluate_elems(alpha.coords)
        assert p3.coefficient(tuple(1 if j == i else 0 for j in range(5))) == grad


def test_polar_p3_zero_iff_node():
    q = 5
    field = field_make(q)
    nodes = set(node_census(q))
    f = burkhardt_form().map_field(field)
    from burkhardt.counting import projective_points
    for coords in projective_points(field, 4):
        if f.evaluate_elems(coords) != 0:
            continue
        point = ProjPoint(field, coords, normalized=True)
        _, _, p3 = polars(point)
        assert p3.is_zero() == (point in nodes)


def test_second_polar_is_scaled_second_derivative():
    p1, p2, _ = polars_symbolic()
    f = burkhardt_form().with_vars(p1.vars)
    gens = MultiPoly.gens(QQ, p1.vars)
    second = MultiPoly.zero(QQ, p1.vars)
    for i, vi in enumerate(YV):
        for j, vj in enumerate(YV):
            second = second + gens[i] * gens[j] * f.derivative(vi).derivative(vj)
    assert second == 6 * p2


def test_group_invariance_over_q():
    report = group_invariance_check(QQ)
    by_name = {g["name"]: g for g in report["generators"]}
    assert by_name["g1"]["scalar"] == 1 and by_name["g1"]["invariant"]
    assert by_name["g2"]["scalar"] == 1 and by_name["g2"]["invariant"]
    assert "skipped" in by_name["g3"]
    # the rational generators permute the 8 rational j-planes
    for name in ("g1", "g2"):
        targets = [t for _, t in by_name[name]["jplane_map"]]
        assert None not in targets
        assert sorted(targets) == sorted(jplane_labels())
    # g2 interchanges primed and unprimed planes
    for src, dst in by_name["g2"]["jplane_map"]:
        assert src.endswith("'") != dst.endswith("'")


def test_group_invariance_with_zeta():
    report = group_invariance_check(field_make(7))
    by_name = {g["name"]: g for g in report["generators"]}
    assert by_name["g3"]["scalar"] == 1 and by_name["g3"]["invariant"]


def test_generators_have_finite_order():
    F7 = field_make(7)
    g1, g2, g3 = group_generators(F7)

    def matmul(a, b):
        return [[F7.add(F7.add(F7.mul(a[i][0], b[0][j]),
                               F7.add(F7.mul(a[i][1], b[1][j]),
                                      F7.mul(a[i][2], b[2][j]))),
                 F7.add(F7.mul(a[i][3], b[3][j]), F7.mul(a[i][4], b[4][j])))
                for j in range(5)] for i in range(5)]

    ident = [[F7.one if i == j else F7.zero for j in range(5)] for i in range(5)]
    for m in (g1, g2, g3):
        power = m
        order = 1
        while power != ident and order < 40:
            power = matmul(power, m)
            order += 1
        assert power == ident


def test_off_hessian_census_counts():
    assert len(off_hessian_points(5)) == 42
    assert len(off_hessian_points(7)) == 0


def test_off_hessian_points_avoid_jplanes():
    field = field_make(5)
    planes = rational_jplanes(field)
    for alpha in off_hessian_points(5):
        assert all(not plane.contains(alpha) for plane in planes)

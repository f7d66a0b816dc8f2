import pytest

from burkhardt.counting import scan_projective
from burkhardt.errors import (BurkhardtError, CharacteristicError,
                              DegeneracyError)
from burkhardt.fields import QQ, field_make
from burkhardt.invariants import (binary_coeffs, binary_discriminant,
                                  binary_form, igusa_clebsch,
                                  igusa_weighted_equal)
from burkhardt.maps import phi_eval
from burkhardt.moduli import (CurveModel, Decomposition, DivisorPair,
                              coble_quadrics, conic_point, cubic_cover,
                              curve_data_symbolic, curve_from_point,
                              level3_decompositions, marked_plane_cubic,
                              project_jplane, standard_quadrics, symmetroid,
                              tangency_check, tangency_witness,
                              torsion_triples, trope_line_of_divisor,
                              verify_divisor_line, verify_order3_certificate,
                              weddle_surface)
from burkhardt.poly import MultiPoly, RatFunc, parse_poly
from burkhardt.projective import LinearSubspace, ProjPoint
from burkhardt.quartic import (jplane_labels, off_hessian_points,
                               rational_jplanes)

BV = ("x", "z")


@pytest.fixture(scope="module")
def census5():
    return off_hessian_points(5)


@pytest.fixture(scope="module")
def census11():
    return off_hessian_points(11)


@pytest.fixture(scope="module")
def symbolic_sextics():
    triples = torsion_triples()
    return [t.G * t.G + t.H ** 3 * t.lam * 4 for t in triples]


# ---------------------------------------------------------------------------
# the symbolic master identities
# ---------------------------------------------------------------------------

def test_four_triples_share_one_sextic(symbolic_sextics):
    ref = symbolic_sextics[1]
    for s in symbolic_sextics[:4]:
        assert s == ref


def test_dual_triple_is_minus_three_times(symbolic_sextics):
    assert symbolic_sextics[4] == symbolic_sextics[1] * (-3)


def test_identities_hold_without_quartic_relation(symbolic_sextics):
    # The equalities above are unconditional rational-function identities:
    # no relation among a1..a4 was imposed, which answers the question of
    # which certificates need the point to lie on the quartic (none of
    # these five do; the quartic relation is needed for the markings not
    # listed here).
    ref = symbolic_sextics[1]
    assert not ref.is_zero()


def test_curve_model_formulas_match_third_triple(symbolic_sextics):
    H3, lam3, G3 = curve_data_symbolic()
    F_prop = G3 * G3 + H3 ** 3 * lam3 * 4
    # bring the X-affine common sextic into (x, z, a1..a4)
    ref = symbolic_sextics[1]
    terms = {}
    for e, c in ref.num.terms.items():
        terms[(e[0], 6 - e[0]) + e[1:]] = c
    num = MultiPoly(QQ, ("x", "z") + ("a1", "a2", "a3", "a4"), terms)
    den = MultiPoly(QQ, ("x", "z") + ("a1", "a2", "a3", "a4"),
                    {(0, 0) + e[1:]: c for e, c in ref.den.terms.items()})
    assert RatFunc(F_prop) == RatFunc(num, den)


# ---------------------------------------------------------------------------
# pointwise curve models and certificates
# ---------------------------------------------------------------------------

def test_lambda_factor_rejection():
    # (1:1:1:1:-1) lies on the quartic and has alpha4^3 + 1 = 0
    F7 = field_make(7)
    alpha = ProjPoint(F7, (1, 1, 1, 1, -1))
    with pytest.raises(DegeneracyError) as err:
        curve_from_point(alpha)
    assert err.value.label == "lambda"


def test_alpha4_rejection(census5):
    field = field_make(5)
    bad = next(a for a in census5 if a.coords[4] == 0)
    with pytest.raises(DegeneracyError) as err:
        curve_from_point(bad)
    assert err.value.label == "alpha4"


def test_off_quartic_rejected():
    F5 = field_make(5)
    with pytest.raises(BurkhardtError):
        curve_from_point(ProjPoint(F5, (1, 0, 0, 0, 0)))


def test_char2_rejected():
    F4 = field_make(2, 2)
    with pytest.raises(CharacteristicError):
        curve_from_point(ProjPoint(F4, (0, 0, 0, 1, 1)))


@pytest.mark.parametrize("q", [5, 11])
def test_census_certificates(q, census5, census11):
    census = census5 if q == 5 else census11
    field = field_make(q)
    admissible = 0
    for alpha in census:
        try:
            decs = level3_decompositions(alpha)
        except DegeneracyError:
            continue
        admissible += 1
        model = curve_from_point(alpha)
        assert binary_discriminant(model.F) != field.zero
        assert len(decs) == 5
        assert [d.label for d in decs] == ["J1", "J2", "J3", "J4", "J4'"]
        assert [d.d for d in decs] == [1, 1, 1, 1, -3]
        for d in decs:
            assert verify_order3_certificate(model.F, d)
    assert admissible > 0


def test_perturbed_certificate_fails(census5):
    alpha = next(a for a in census5 if a.coords[4] != 0)
    model = curve_from_point(alpha)
    decs = level3_decompositions(alpha)
    d1 = decs[0]
    x3 = parse_poly("x^3", BV, model.field)
    broken = Decomposition(d1.label, d1.d, d1.H, d1.lam, d1.G + x3)
    assert not verify_order3_certificate(model.F, broken)


def test_degenerate_certificates_fail():
    F7 = field_make(7)
    F = parse_poly("x^6 + z^6", BV, F7)
    H = parse_poly("x^2", BV, F7)
    G = parse_poly("x^3", BV, F7)
    assert not verify_order3_certificate(F, Decomposition("J1", 1, H, 0, G))
    # resultant(H, G) = 0 when G = H * linear
    lin = parse_poly("x + z", BV, F7)
    assert not verify_order3_certificate(
        parse_poly("x^6", BV, F7),
        Decomposition("J1", 1, H, 1, H * lin))


def test_twist_flag_flip_keeps_certificates(census11):
    # scaling (H, lam, G, d) -> (H, lam/s^2, G/s, d*s^2) preserves validity
    alpha = next(a for a in census11 if a.coords[4] != 0)
    model = curve_from_point(alpha)
    field = model.field
    d1 = level3_decompositions(alpha)[0]
    s = 3
    s2 = field.coerce(s * s)
    twisted = Decomposition(
        d1.label, d1.d * s * s,
        d1.H, field.div(d1.lam, s2), d1.G.scale_by_inverse(field.coerce(s)))
    combo = twisted.G * twisted.G + (twisted.H ** 3).scale(4).scale_elem(twisted.lam)
    assert combo.scale(twisted.d) == model.F


# ---------------------------------------------------------------------------
# quadric systems and Kummer geometry
# ---------------------------------------------------------------------------

def test_standard_quadrics_veronese():
    F = parse_poly("x^6 + 8*x^3*z^3 + z^6", BV, QQ)
    system = standard_quadrics(F)
    # the rational normal curve (x^3 : x^2 z : x z^2 : z^3) kills Q1..Q3
    xz = ("x", "z")
    x, z = MultiPoly.gens(QQ, xz)
    ver = {"x0": x ** 3, "x1": x ** 2 * z, "x2": x * z ** 2, "x3": z ** 3}
    for q in system.quadrics[:3]:
        assert q.substitute(ver).is_zero()
    assert system.quadrics[3].substitute(ver) == F


def test_standard_quadrics_base_points_are_roots():
    F7 = field_make(7)
    # sextic with six distinct rational roots 0,1,2,3,4,5 over F_7
    roots = [0, 1, 2, 3, 4, 5]
    x, z = MultiPoly.gens(F7, BV)
    F = MultiPoly.const(F7, BV, 1)
    for r in roots:
        F = F * (x - z.scale(r))
    system = standard_quadrics(F)
    pts = system.base_points()
    assert len(pts) == 6
    expected = {ProjPoint(F7, (r ** 3 % 7, r ** 2 % 7, r, 1)) for r in roots}
    assert set(pts) == expected


def test_coble_base_points_match_sextic_roots(census5):
    F5 = field_make(5)
    checked = 0
    for alpha in census5:
        try:
            model = curve_from_point(alpha)
        except DegeneracyError:
            continue
        system = coble_quadrics(alpha)
        for m in (1, 2, 3):
            ext = field_make(5, m) if m > 1 else F5
            base = len(system.base_points(ext))
            f_ext = (model.F if m == 1 else
                     MultiPoly(ext, model.F.vars, dict(model.F.terms),
                               _clean=True))
            roots = scan_projective([f_ext], ext, 1, mode="all_zero")
            assert base == roots
        checked += 1
        if checked >= 4:
            break
    assert checked == 4


def test_six_geometric_base_points_instance():
    # (1:0:0:3:3) over F_5 splits as 2 rational + 2 quadratic points
    F5 = field_make(5)
    alpha = ProjPoint(F5, (1, 0, 0, 3, 3))
    system = coble_quadrics(alpha)
    n1 = len(system.base_points())
    n2 = len(system.base_points(field_make(5, 2)))
    n3 = len(system.base_points(field_make(5, 3)))
    d1 = n1
    d2 = (n2 - n1) // 2
    d3 = (n3 - n1) // 3
    assert d1 + 2 * d2 + 3 * d3 == 6


def test_base_points_lie_on_weddle(census5):
    F5 = field_make(5)
    alpha = next(a for a in census5 if a.coords[4] != 0)
    W = weddle_surface(alpha)
    assert W.degree() == 4 and W.is_homogeneous()
    ext = field_make(5, 2)
    Wext = MultiPoly(ext, W.vars, dict(W.terms), _clean=True)
    system = coble_quadrics(alpha)
    pts = system.base_points(ext)
    for p in pts:
        assert Wext.evaluate_elems(p.coords) == 0


def test_symmetroid_is_quartic_with_trope(census5):
    alpha = next(a for a in census5 if a.coords[4] != 0)
    quartic, trope = symmetroid(alpha)
    assert quartic.degree() == 4 and quartic.is_homogeneous()
    assert trope.dim == 2 and trope.ambient_dim == 3


def test_projection_fixes_hyperplane_pointwise(census5):
    F5 = field_make(5)
    alpha = next(a for a in census5 if a.coords[4] != 0)
    plane = LinearSubspace(F5, [(0, 1, 0, 0, 2), (0, 0, 1, 0, 3),
                                (0, 0, 0, 1, 0)])
    image = project_jplane(alpha, plane)
    assert image == LinearSubspace(F5, [row[1:] for row in plane.basis])


def test_projection_rejects_center_on_plane():
    F5 = field_make(5)
    alpha = ProjPoint(F5, (1, 1, 0, 0, 0))
    plane = LinearSubspace(F5, [(1, 1, 0, 0, 0), (0, 0, 1, 0, 0),
                                (0, 0, 0, 1, 0)])
    with pytest.raises(BurkhardtError):
        project_jplane(alpha, plane)


def test_projected_jplanes_distinct(census5):
    F5 = field_make(5)
    alpha = next(a for a in census5 if a.coords[4] != 0)
    planes = rational_jplanes(F5)
    images = [project_jplane(alpha, p) for p in planes[:4]]
    assert len(set(images)) == 4


@pytest.mark.parametrize("q", [5, 11])
def test_tangency_for_rational_jplanes(q, census5, census11):
    census = census5 if q == 5 else census11
    field = field_make(q)
    planes = rational_jplanes(field)[:4]
    tested = 0
    for alpha in census:
        try:
            curve_from_point(alpha)
        except DegeneracyError:
            continue
        for plane in planes:
            assert tangency_check(alpha, plane, depth=1)
        tested += 1
        if tested >= 10:
            break
    assert tested >= 10


def test_tangency_points_differ_between_planes(census5):
    field = field_make(5)
    planes = rational_jplanes(field)
    alpha = next(a for a in census5 if a.coords[4] != 0)
    w1 = tangency_witness(alpha, planes[0], depth=1)
    w3 = tangency_witness(alpha, planes[2], depth=1)
    assert w1 is not None and w3 is not None
    assert w1 != w3


def test_nontangent_control_plane_exists(census5):
    field = field_make(5)
    alpha = next(a for a in census5 if a.coords[4] != 0)
    found = False
    for c in range(5):
        plane = LinearSubspace(field, [(0, 1, 0, 0, c), (0, 0, 1, 0, 1),
                                       (0, 0, 0, 1, 0)])
        try:
            if not tangency_check(alpha, plane, depth=1):
                found = True
                break
        except DegeneracyError:
            continue
    assert found


# ---------------------------------------------------------------------------
# divisor lines
# ---------------------------------------------------------------------------

def test_trope_line_examples():
    F7 = field_make(7)
    D = DivisorPair.make(F7, (1, 1), (-1, 1))
    xi = trope_line_of_divisor(D)
    assert (xi[0], xi[2]) == (1, 6) and xi[1] == 0  # (1 : 0 : -1)
    eta = conic_point(F7, 1, 1)
    assert F7.add(F7.add(F7.mul(xi[0], eta[2]), F7.mul(xi[1], eta[1])),
                  F7.mul(xi[2], eta[0])) == 0
    D2 = DivisorPair.make(F7, (0, 1), (1, 0))
    assert trope_line_of_divisor(D2) == (0, 1, 0)


def test_verify_divisor_line_sweep():
    import random
    rng = random.Random(123)
    for q in (7, 11, 13):
        field = field_make(q)
        sextic = parse_poly("x^6 + z^6", BV, field)
        for _ in range(50):
            pts = []
            while len(pts) < 2:
                cand = (rng.randrange(q), rng.randrange(q))
                if cand != (0, 0):
                    pts.append(cand)
            assert verify_divisor_line(sextic, DivisorPair.make(field, *pts))


def test_doubled_point_tangency():
    field = field_make(11)
    sextic = parse_poly("x^6 + z^6", BV, field)
    for x0 in range(1, 11):
        D = DivisorPair.make(field, (x0, 1), (x0, 1))
        assert verify_divisor_line(sextic, D)
        xi = trope_line_of_divisor(D)
        # tangency: the restriction quadratic has a double root
        disc = field.sub(field.mul(xi[1], xi[1]),
                         field.mul(field.coerce(4), field.mul(xi[0], xi[2])))
        assert disc == 0


def test_divisor_swap_symmetric():
    field = field_make(13)
    a = trope_line_of_divisor(DivisorPair.make(field, (2, 5), (7, 1)))
    b = trope_line_of_divisor(DivisorPair.make(field, (7, 1), (2, 5)))
    assert a == b


# ---------------------------------------------------------------------------
# cubic covers
# ---------------------------------------------------------------------------

def test_marked_cubic_is_polar_restriction(census11):
    from burkhardt.quartic import polars
    alpha = next(a for a in census11 if a.coords[4] != 0)
    p1 = polars(alpha)[0]
    restricted = p1.substitute({"y0": 0, "y1": 0}).drop_vars(("y0", "y1"))
    assert restricted == marked_plane_cubic(alpha)


def test_cover_discriminant_identity_symbolic():
    from burkhardt.poly import cubic_discriminant
    t1 = torsion_triples()[0]
    one = RatFunc.from_scalar(QQ, t1.H.num.vars, 1)
    zero = RatFunc.from_scalar(QQ, t1.H.num.vars, 0)
    disc = cubic_discriminant(one, zero, t1.H * t1.lam * 3, t1.G * t1.lam)
    sextic = t1.G * t1.G + t1.H ** 3 * t1.lam * 4
    assert disc == sextic * t1.lam * t1.lam * (-27)


def test_cover_igusa_matches_curve(census11):
    field = field_make(11)
    tested = 0
    for alpha in census11:
        try:
            model = curve_from_point(alpha)
            cover = cubic_cover(alpha)
        except DegeneracyError:
            continue
        if binary_discriminant(cover.discriminant_sextic) == field.zero:
            continue  # the raw substitution degenerates off the open part
        assert igusa_weighted_equal(
            igusa_clebsch(cover.discriminant_sextic), igusa_clebsch(model.F))
        tested += 1
        if tested >= 10:
            break
    assert tested >= 10


def test_cover_igusa_rational_points():
    seen = 0
    for t in [(-3, -3, -3), (-3, -3, -2), (-3, -3, -1), (-3, -3, 0),
              (-3, -3, 1), (0, 1, 0), (1, 2, 0)]:
        try:
            alpha = phi_eval(t)
            model = curve_from_point(alpha)
            cover = cubic_cover(alpha)
        except BurkhardtError:
            continue
        if binary_discriminant(cover.discriminant_sextic) == 0:
            continue
        assert igusa_weighted_equal(
            igusa_clebsch(cover.discriminant_sextic), igusa_clebsch(model.F))
        seen += 1
    assert seen >= 3


def test_cover_center_on_cubic_rejected():
    # search a quartic point whose projection center kills the lead
    field = field_make(11)
    f = None
    from burkhardt.quartic import burkhardt_form
    fq = burkhardt_form().map_field(field)
    from burkhardt.counting import projective_points
    hit = None
    for coords in projective_points(field, 4):
        if fq.evaluate_elems(coords) != 0:
            continue
        alpha = ProjPoint(field, coords, normalized=True)
        E = marked_plane_cubic(alpha)
        if E.is_zero():
            continue
        if E.evaluate_elems(coords[2:]) == 0:
            hit = alpha
            break
    assert hit is not None
    with pytest.raises(DegeneracyError) as err:
        cubic_cover(hit)
    assert err.value.label == "projection-center"


def test_cover_payload_shapes(census11):
    alpha = next(a for a in census11 if a.coords[4] != 0)
    cover = cubic_cover(alpha)
    a, b, c, d = cover.coefficients
    assert a.degree() <= 0
    assert all(p.is_zero() or p.is_homogeneous() for p in (b, c, d))
    assert cover.discriminant_sextic.degree() == 6

import pytest

from burkhardt.counting import scan_projective
from burkhardt.errors import BurkhardtError, CharacteristicError, ScanCapError
from burkhardt.fields import QQ, field_make
from burkhardt.poly import parse_poly
from burkhardt.zeta import (ZetaFunction, conjugate_pair, count_burkhardt,
                            count_hypersurface, epsilon,
                            hessian_intersection_count, inclusion_exclusion,
                            off_hessian_count, point_count_from_zeta,
                            solve_inclusion_exclusion, verify_desing_correction,
                            zeta_affine, zeta_burkhardt, zeta_desing, zeta_pn)


def test_epsilon():
    assert epsilon(7) == 1
    assert epsilon(2) == -1
    assert epsilon(4) == 1
    with pytest.raises(CharacteristicError):
        epsilon(9)


def test_zeta_burkhardt_factors_eps_plus():
    z = zeta_burkhardt(7)
    assert z.factors == ((1, 1, 1), (7, 1, -29), (49, 1, 16), (343, 1, 1))


def test_zeta_burkhardt_factors_eps_minus():
    z = zeta_burkhardt(2)
    assert set(z.factors) == {
        (1, 1, 1), (2, 1, -15), (-2, 1, -14),
        (4, 1, 10), (-4, 1, 6), (8, 1, 1)}
    assert point_count_from_zeta(z, 1) == 23


def test_zeta_desing_factors():
    z7 = zeta_desing(7)
    assert z7.factors == ((1, 1, 1), (7, 1, 61), (49, 1, 61), (343, 1, 1))
    z2 = zeta_desing(2)
    assert set(z2.factors) == {
        (1, 1, 1), (2, 1, 36), (-2, 1, 25), (-4, 1, 25), (4, 1, 36),
        (8, 1, 1)}


@pytest.mark.parametrize("q", [2, 4, 5, 7, 8, 11, 13])
def test_desing_correction_identity(q):
    assert verify_desing_correction(q)


def test_desing_correction_exponent_pattern_q2():
    from burkhardt.zeta import node_blowup_correction
    corr = node_blowup_correction(2)
    assert dict(((c, d), e) for c, d, e in corr.factors) == {
        (2, 1): 51, (-2, 1): 39, (4, 1): 26, (-4, 1): 19}


def test_zeta_pn():
    z = zeta_pn(3, 5)
    assert z.factors == ((1, 1, 1), (5, 1, 1), (25, 1, 1), (125, 1, 1))
    assert z.count(1) == 156
    assert z.count(2) == 25 ** 3 + 25 ** 2 + 25 + 1


def test_group_law_product_quotient():
    a = zeta_pn(2, 3)
    b = zeta_burkhardt(7)
    assert (a * (b / a)) == b
    assert (b / b) == ZetaFunction.one()


def test_conjugate_pair_counts_against_enumeration():
    # degenerate conic u^2 = d v^2 over F_q, d a nonsquare: two conjugate
    # lines meeting in the rational point (0:0:1)
    for q, d in ((3, 2), (5, 2), (7, 3)):
        field = field_make(q)
        conic = parse_poly(f"u^2 - {d}*v^2", ("u", "v", "w"), QQ)
        z = conjugate_pair(zeta_affine(1, q * q)) * zeta_pn(0, q)
        for n in (1, 2, 3):
            ext = field_make(q, n) if n > 1 else field
            brute = scan_projective([conic.map_field(ext)], ext, 2,
                                    mode="all_zero")
            assert brute == z.count(n), (q, n)


def test_conjugate_pair_splits_squares():
    z = conjugate_pair(ZetaFunction.from_factors([(4, 1, 2), (3, 1, 1)]))
    assert set(z.factors) == {(2, 1, 2), (-2, 1, 2), (3, 2, 1)}


def test_count_recovery_with_quadratic_factors():
    z = ZetaFunction.from_factors([(3, 2, 1)])
    assert z.count(1) == 0
    assert z.count(2) == 2 * 3
    assert z.count(4) == 2 * 9


@pytest.mark.parametrize("q,n,expected", [(2, 1, 23), (7, 1, 925),
                                          (2, 2, 205), (5, 2, 24901)])
def test_burkhardt_counts(q, n, expected):
    assert count_burkhardt(q, n) == expected


def test_count_hypersurface_generic():
    vars5 = ("y0", "y1", "y2", "y3", "y4")
    hyper = parse_poly("y0", vars5, QQ)
    assert count_hypersurface(hyper, 2, 1) == 15
    with pytest.raises(ScanCapError):
        count_hypersurface(hyper, 2, 17)  # 2^17 over the cap


@pytest.mark.parametrize("q", [2, 4, 5, 7, 8, 11, 13, 16])
def test_off_hessian_modes_agree(q):
    brute = off_hessian_count(q, "brute")
    formula = off_hessian_count(q, "formula")
    assert brute == formula
    if q in (2, 4, 7, 13):
        assert brute == 0


def test_off_hessian_views_are_consistent():
    for q in (5, 11):
        total = count_burkhardt(q, 1)
        off = off_hessian_count(q, "brute")
        on = hessian_intersection_count(q)
        assert on == total - off


def test_inclusion_exclusion_examples():
    q = 3
    lines_and_point = [[1, 0, 1], [0, 1, 1], [0, 0, 1]]
    e, z = inclusion_exclusion(lines_and_point,
                               [zeta_pn(1, q), zeta_pn(1, q), zeta_pn(0, q)])
    assert e == [1, 1, -1]
    assert z.count(1) == 2 * q + 1
    line_in_plane = [[1, 0], [1, 1]]
    e2, z2 = inclusion_exclusion(line_in_plane, [zeta_pn(1, q), zeta_pn(2, q)])
    assert e2 == [0, 1]
    assert z2.count(1) == q * q + q + 1
    assert solve_inclusion_exclusion([[1]]) == [1]


def test_inclusion_exclusion_union_against_enumeration():
    # union of the three coordinate lines of P^2 over F_q
    q = 5
    field = field_make(q)
    containment = [
        [1, 0, 0, 1, 1, 0],
        [0, 1, 0, 1, 0, 1],
        [0, 0, 1, 0, 1, 1],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
    ]
    zetas = [zeta_pn(1, q)] * 3 + [zeta_pn(0, q)] * 3
    e, z = inclusion_exclusion(containment, zetas)
    assert e == [1, 1, 1, -1, -1, -1]
    union = parse_poly("u*v*w", ("u", "v", "w"), QQ).map_field(field)
    brute = scan_projective([union], field, 2, mode="all_zero")
    assert z.count(1) == brute == 3 * (q + 1) - 3


def test_inclusion_exclusion_singular_rejected():
    with pytest.raises(BurkhardtError):
        solve_inclusion_exclusion([[0, 0], [0, 0]])


def test_zeta_char3_rejected():
    with pytest.raises(CharacteristicError):
        zeta_burkhardt(9)
    with pytest.raises(CharacteristicError):
        count_burkhardt(3, 1)


def test_json_pairs_form():
    z = zeta_burkhardt(7)
    pairs = z.as_pairs()
    assert [1, 1] in pairs and [7, -29] in pairs

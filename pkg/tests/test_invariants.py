import random

import pytest

from burkhardt.errors import CharacteristicError
from burkhardt.fields import QQ, field_make
from burkhardt.invariants import (IgusaClebsch, binary_coeffs, binary_discriminant,
                                  binary_form, igusa_clebsch,
                                  igusa_weighted_equal, sylvester_resultant,
                                  transvectant)
from burkhardt.poly import parse_poly

BV = ("x", "z")

# Frozen from an independent sympy evaluation of the same classical
# formulas (transvectants for I2/I4/I6 and sympy.discriminant for I10).
REGRESSION_SEXTIC = "x^6 + 8*x^3*z^3 + z^6"
REGRESSION_TUPLE = (144, 22356, -99144, 157464000)
FERMAT_TUPLE = (-240, 1620, -119880, -46656)


def test_regression_tuple():
    F = parse_poly(REGRESSION_SEXTIC, BV, QQ)
    assert igusa_clebsch(F).as_tuple() == REGRESSION_TUPLE


def test_fermat_tuple():
    F = parse_poly("x^6 + z^6", BV, QQ)
    assert igusa_clebsch(F).as_tuple() == FERMAT_TUPLE


def test_live_sympy_oracle():
    sympy = pytest.importorskip("sympy")
    x = sympy.symbols("x")
    rng = random.Random(11)
    for _ in range(5):
        coeffs = [rng.randint(-4, 4) for _ in range(7)]
        if coeffs[0] == 0:
            coeffs[0] = 1
        F = binary_form(QQ, coeffs)
        expected = sympy.discriminant(
            sum(c * x ** (6 - i) for i, c in enumerate(coeffs)), x)
        assert igusa_clebsch(F).I10 == int(expected)


def test_scaling_law_random():
    rng = random.Random(5)
    for _ in range(20):
        coeffs = [rng.randint(-5, 5) for _ in range(7)]
        if all(c == 0 for c in coeffs):
            coeffs[0] = 1
        lam = rng.choice([2, 3, -1, 5, -7])
        F = binary_form(QQ, coeffs)
        a = igusa_clebsch(F)
        b = igusa_clebsch(F.scale(lam))
        assert b.I2 == lam ** 2 * a.I2
        assert b.I4 == lam ** 4 * a.I4
        assert b.I6 == lam ** 6 * a.I6
        assert b.I10 == lam ** 10 * a.I10
        assert igusa_weighted_equal(a, b)


def test_i10_vanishes_iff_discriminant():
    sympy = pytest.importorskip("sympy")
    x = sympy.symbols("x")
    rng = random.Random(3)
    for _ in range(20):
        coeffs = [rng.randint(-4, 4) for _ in range(7)]
        if coeffs[0] == 0:
            coeffs[0] = 2
        F = binary_form(QQ, coeffs)
        disc = sympy.discriminant(
            sum(c * x ** (6 - i) for i, c in enumerate(coeffs)), x)
        assert (igusa_clebsch(F).I10 == 0) == (disc == 0)
    # five constructed repeated-root sextics
    for mult in [
        "x^2*(x^4 + z^4)",
        "(x - z)^2*(x^4 + x*z^3 + z^4)",
        "x^3*z^3",
        "(x + z)^2*(x + 2*z)^2*(x^2 + z^2)",
        "(x^2 - z^2)^2*(x^2 + z^2)",
    ]:
        F = parse_poly(mult, BV, QQ)
        assert igusa_clebsch(F).I10 == 0


def test_weighted_equal_examples():
    F1 = parse_poly("x^6 + z^6", BV, QQ)
    F2 = parse_poly(REGRESSION_SEXTIC, BV, QQ)
    a = igusa_clebsch(F1)
    b = igusa_clebsch(F2)
    assert igusa_weighted_equal(a, a)
    assert not igusa_weighted_equal(a, b)


def test_weighted_equal_vanishing_pattern():
    f = QQ
    a = IgusaClebsch(f, 0, 2, 3, 4)
    b = IgusaClebsch(f, 1, 2, 3, 4)
    assert not igusa_weighted_equal(a, b)
    c = IgusaClebsch(f, 0, 2 * 16, 3 * 64, 4 * 1024)  # c = 2
    assert igusa_weighted_equal(a, c)


def test_characteristic_restrictions():
    for p in (2, 3, 5):
        F = parse_poly("x^6 + z^6", BV, field_make(p))
        with pytest.raises(CharacteristicError):
            igusa_clebsch(F)
    F7 = field_make(7)
    F = parse_poly("x^6 + z^6", BV, F7)
    got = igusa_clebsch(F)
    assert got.as_tuple() == tuple(F7.coerce(v) for v in FERMAT_TUPLE)


def test_discriminant_works_in_char5():
    F5 = field_make(5)
    F = parse_poly("x^6 + x*z^5 + z^6", BV, F5)
    d = binary_discriminant(F)
    # squarefree over F_5 iff gcd(f, f') trivial; check against root scan
    G = parse_poly("x^2*(x^4 + z^4)", BV, F5)
    assert binary_discriminant(G) == 0
    assert d != 0


def test_transvectant_low_degree():
    # (f, f)_6 of x^6 + z^6 is a constant; fix its value as a regression
    F = parse_poly("x^6 + z^6", BV, QQ)
    A = transvectant(F, F, 6, 6, 6)
    assert A.degree() <= 0
    assert igusa_clebsch(F).I2 == -120 * A.constant_value()


def test_sylvester_resultant_common_root():
    # x - z and x^2 - z^2 share a root
    u = [1, -1]
    v = [1, 0, -1]
    assert sylvester_resultant(u, v, QQ) == 0
    assert sylvester_resultant([1, -1], [1, 1], QQ) != 0


def test_binary_coeffs_roundtrip():
    F = parse_poly("2*x^6 - x^3*z^3 + 5*z^6", BV, QQ)
    coeffs = binary_coeffs(F, 6)
    assert coeffs == [2, 0, 0, -1, 0, 0, 5]
    assert binary_form(QQ, coeffs) == F

"""Dev scratch: pin constants with sympy before implementing.

1. Relation Res(F_x, F_z) = c * disc(F) for binary sextics.
2. Igusa-Clebsch regression tuple for x^6 + 8 x^3 z^3 + z^6.
3. Hessian determinant content for the Burkhardt quartic.
"""
import sympy as sp
from math import comb, factorial

x, z, lam = sp.symbols("x z lam")

# --- 1. discriminant constant ---
roots = [1, 2, 3, 5, 7, 11]
a0 = 3
F = sp.expand(a0 * sp.prod([x - r * z for r in roots]))
Fx = sp.diff(F, x)
Fz = sp.diff(F, z)


def binary_coeffs(poly, deg):
    p = sp.Poly(poly, x, z)
    out = []
    for i in range(deg + 1):
        out.append(p.coeff_monomial(x ** (deg - i) * z ** i))
    return out


def sylvester_res(u, v):
    # u, v coefficient lists of formal degrees m, n (len m+1, n+1)
    m = len(u) - 1
    n = len(v) - 1
    N = m + n
    M = sp.zeros(N, N)
    for i in range(n):
        for j, c in enumerate(u):
            M[i, i + j] = c
    for i in range(m):
        for j, c in enumerate(v):
            M[n + i, i + j] = c
    return M.det()


res = sylvester_res(binary_coeffs(Fx, 5), binary_coeffs(Fz, 5))
disc_classical = a0 ** 10 * sp.prod(
    [(roots[i] - roots[j]) ** 2 for i in range(6) for j in range(i + 1, 6)]
)
print("Res(Fx,Fz)/disc =", sp.nsimplify(res / disc_classical), "=",
      sp.factorint(int(res / disc_classical)))

# --- 2. transvectants and a frozen Igusa-Clebsch tuple ---
def transvectant(f, g, m, n, r):
    pref = sp.Rational(factorial(m - r) * factorial(n - r), factorial(m) * factorial(n))
    s = 0
    for j in range(r + 1):
        s += (-1) ** j * comb(r, j) * sp.diff(f, x, r - j, z, j) * sp.diff(g, x, j, z, r - j)
    return sp.expand(pref * s)


def igusa_clebsch(F):
    i4 = transvectant(F, F, 6, 6, 4)
    delta = transvectant(i4, i4, 4, 4, 2)
    A = transvectant(F, F, 6, 6, 6)
    B = transvectant(i4, i4, 4, 4, 4)
    C = transvectant(i4, delta, 4, 4, 4)
    I2 = -120 * A
    I4 = -720 * A ** 2 + 6750 * B
    I6 = 8640 * A ** 3 - 108000 * A * B + 202500 * C
    Fx = sp.diff(F, x)
    Fz = sp.diff(F, z)
    I10 = sp.Rational(1, 1296) * sylvester_res(binary_coeffs(Fx, 5), binary_coeffs(Fz, 5))
    return sp.simplify(I2), sp.simplify(I4), sp.simplify(I6), sp.simplify(I10)


F_reg = x ** 6 + 8 * x ** 3 * z ** 3 + z ** 6
print("IC(x^6+8x^3z^3+z^6) =", igusa_clebsch(F_reg))
F2 = x ** 6 + z ** 6
print("IC(x^6+z^6)        =", igusa_clebsch(F2))

# scaling law sanity
I = igusa_clebsch(F_reg)
Il = igusa_clebsch(sp.expand(7 * F_reg))
print("scaling ok:", [sp.simplify(Il[k] / I[k]) for k in range(4)] ==
      [49, 7 ** 4, 7 ** 6, 7 ** 10])

# --- 3. Burkhardt Hessian content ---
y = sp.symbols("y0:5")
f = y[0] * (y[0] ** 3 + y[1] ** 3 + y[2] ** 3 + y[3] ** 3 + y[4] ** 3) + 3 * y[1] * y[2] * y[3] * y[4]
H = sp.Matrix(5, 5, lambda i, j: sp.diff(f, y[i], y[j]))
det = sp.expand(H.det())
he = sp.expand(det / 486)
coeffs = sp.Poly(he, *y).coeffs()
print("Hessian/486 integer content:", sp.gcd(list(map(sp.Integer, coeffs))),
      "n_terms:", len(coeffs))
print("is integer:", all(sp.Integer(c) == c for c in coeffs))
# check He at (1,1,1,1,-1)  (needed for error-ordering in curve_from_point)
print("He(1,1,1,1,-1) =", he.subs(dict(zip(y, [1, 1, 1, 1, -1]))))
print("He(-1,1,1,1,1) =", he.subs(dict(zip(y, [-1, 1, 1, 1, 1]))))
print("f(1,1,1,1,-1) =", f.subs(dict(zip(y, [1, 1, 1, 1, -1]))))

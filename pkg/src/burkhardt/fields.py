"""Exact coefficient fields: the rationals and GF(p^k).

Finite-field elements are plain Python integers in ``range(q)``.  For a
prime field the integer is the usual residue.  For GF(p^k) the integer
encodes a polynomial over GF(p) in base p: the element
``c_0 + c_1*x + ... + c_{k-1}*x^{k-1}`` is stored as ``sum(c_i * p**i)``.
Rational-field elements are ``int`` or ``fractions.Fraction``.

All fields are immutable and hashable; arithmetic never mutates shared
state, so field objects are safe to share between workers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import FieldError

LOG_TABLE_MAX = 1 << 16  # build discrete-log tables up to this field size


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond desk scale."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _factorize(n: int) -> list[int]:
    """Prime divisors of n by trial division (n stays small here)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# dense univariate arithmetic over GF(p), used for modulus handling only
# ---------------------------------------------------------------------------

def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a, b, m, p):
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    return _poly_divmod(res, m, p)[1]


def _poly_divmod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    lead_inv = pow(m[-1], p - 2, p)
    q = [0] * max(0, len(a) - dm)
    while len(_poly_trim(a)) - 1 >= dm:
        da = len(a) - 1
        c = a[-1] * lead_inv % p
        q[da - dm] = c
        for i in range(dm + 1):
            a[da - dm + i] = (a[da - dm + i] - c * m[i]) % p
    return q, _poly_trim(a)


def _poly_gcd(a, b, p):
    a, b = list(a), list(b)
    while _poly_trim(b):
        a, b = b, _poly_divmod(a, b, p)[1]
    return _poly_trim(a)


def _poly_powmod_frobenius(base, d, m, p):
    """base^(p^d) mod m by d successive p-th powers."""
    r = list(base)
    for _ in range(d):
        r = _poly_powmod(r, p, m, p)
    return r


def _poly_powmod(a, e, m, p):
    r = [1]
    b = list(a)
    while e:
        if e & 1:
            r = _poly_mulmod(r, b, m, p)
        b = _poly_mulmod(b, b, m, p)
        e >>= 1
    return r


def is_irreducible(coeffs, p: int) -> bool:
    """Whether a monic polynomial over GF(p) is irreducible.

    Uses the criterion that a degree-k polynomial is irreducible iff it
    shares no factor with x^(p^d) - x for every d <= k/2.
    """
    k = len(coeffs) - 1
    if k < 1 or coeffs[-1] != 1:
        return False
    if k == 1:
        return True
    if coeffs[0] == 0:
        return False
    x = [0, 1]
    r = list(x)
    for d in range(1, k // 2 + 1):
        r = _poly_powmod(r, p, coeffs, p)
        diff = list(r)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(coeffs, diff, p)
        if len(g) - 1 >= 1:
            return False
    return True


def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """The canonical modulus: smallest monic irreducible of degree k.

    Candidates x^k + c_{k-1} x^{k-1} + ... + c_0 are ordered by the
    coefficient word (c_{k-1}, ..., c_0), so the choice is reproducible
    across platforms.
    """
    for t in range(p ** k):
        coeffs = []
        tt = t
        for _ in range(k):
            coeffs.append(tt % p)
            tt //= p
        coeffs.reverse()  # t encodes (c_{k-1}, ..., c_0) most significant first
        cand = coeffs[::-1] + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({p})")


class Field:
    """Common interface for the rational field and GF(p^k)."""

    p: int
    k: int
    order: int | None  # None for the rationals

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = self.one
        b = a
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def coerce(self, x):
        raise NotImplementedError

    def elements(self):
        raise NotImplementedError

    @property
    def characteristic(self) -> int:
        return self.p

    def zeta3(self):
        """A primitive cube root of unity, or None if the field has none."""
        return None


class RationalField(Field):
    """The field of rational numbers; elements are int or Fraction."""

    p = 0
    k = 1
    order = None
    zero = 0
    one = 1

    @staticmethod
    def _norm(x):
        if isinstance(x, Fraction) and x.denominator == 1:
            return int(x)
        return x

    def add(self, a, b):
        return self._norm(a + b)

    def sub(self, a, b):
        return self._norm(a - b)

    def mul(self, a, b):
        return self._norm(a * b)

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._norm(Fraction(1, 1) / Fraction(a))

    def coerce(self, x):
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            return self._norm(x)
        raise FieldError(f"cannot coerce {x!r} into Q")

    def elements(self):
        raise FieldError("the rational field is infinite")

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


class PrimeField(Field):
    """GF(p) with elements 0..p-1."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.k = 1
        self.order = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, e: int):
        return pow(a, e, self.p) if e >= 0 else pow(self.inv(a), -e, self.p)

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError(
                    f"denominator {x.denominator} not invertible mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        raise FieldError(f"cannot coerce {x!r} into GF({self.p})")

    def elements(self):
        return range(self.p)

    def zeta3(self):
        if self.p % 3 != 1:
            return None
        g = _generator_mod(self.p)
        w = pow(g, (self.p - 1) // 3, self.p)
        return min(w, w * w % self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


def _generator_mod(p: int) -> int:
    factors = _factorize(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            return g
    raise FieldError(f"no generator mod {p}")  # unreachable for prime p


class ExtensionField(Field):
    """GF(p^k), k > 1, with base-p integer encoding of elements.

    Multiplication goes through discrete-log tables (built lazily) when
    the field is small enough, otherwise through polynomial arithmetic
    modulo the defining polynomial.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if k < 2:
            raise FieldError("extension degree must be >= 2")
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {k}")
        if not is_irreducible(list(modulus), p):
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.k = k
        self.order = p ** k
        self.modulus = modulus
        self.zero = 0
        self.one = 1
        self._log = None
        self._exp = None

    # -- encoding helpers --

    def decode(self, a: int) -> list[int]:
        digits = []
        for _ in range(self.k):
            digits.append(a % self.p)
            a //= self.p
        return digits

    def encode(self, digits) -> int:
        a = 0
        for d in reversed(digits):
            a = a * self.p + d % self.p
        return a

    # -- arithmetic --

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        p = self.p
        res = 0
        mult = 1
        while a or b:
            res += (a % p + b % p) % p * mult
            a //= p
            b //= p
            mult *= p
        return res

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        if self.p == 2:
            return a
        p = self.p
        res = 0
        mult = 1
        while a:
            res += (-a % p) % p * mult
            a //= p
            mult *= p
        return res

    def _ensure_tables(self):
        if self._exp is not None:
            return
        if self.order > LOG_TABLE_MAX:
            return
        q = self.order
        g = self._find_generator()
        exp = [1] * (q - 1)
        acc = 1
        for i in range(1, q - 1):
            acc = self._mul_poly(acc, g)
            exp[i] = acc
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log

    def _mul_poly(self, a, b):
        da = self.decode(a)
        db = self.decode(b)
        prod = [0] * (2 * self.k - 1)
        p = self.p
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        # reduce modulo the defining polynomial
        m = self.modulus
        for i in range(len(prod) - 1, self.k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(self.k):
                    prod[i - self.k + j] = (prod[i - self.k + j] - c * m[j]) % p
        return self.encode(prod[: self.k])

    def _find_generator(self):
        q = self.order
        factors = _factorize(q - 1)
        for g in range(2, q):
            if all(self._pow_poly(g, (q - 1) // f) != 1 for f in factors):
                return g
        raise FieldError("no multiplicative generator found")

    def _pow_poly(self, a, e):
        r = 1
        b = a
        while e:
            if e & 1:
                r = self._mul_poly(r, b)
            b = self._mul_poly(b, b)
            e >>= 1
        return r

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        self._ensure_tables()
        if self._exp is None:
            return self._mul_poly(a, b)
        idx = self._log[a] + self._log[b]
        qm1 = self.order - 1
        if idx >= qm1:
            idx -= qm1
        return self._exp[idx]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        self._ensure_tables()
        if self._exp is None:
            return self._pow_poly(a, self.order - 2)
        idx = self._log[a]
        return self._exp[0] if idx == 0 else self._exp[self.order - 1 - idx]

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError(
                    f"denominator {x.denominator} not invertible mod {self.p}")
            num = x.numerator % self.p
            den_inv = pow(x.denominator, -1, self.p)
            return num * den_inv % self.p
        raise FieldError(f"cannot coerce {x!r} into GF({self.order})")

    def elements(self):
        return range(self.order)

    def zeta3(self):
        if self.order % 3 != 1:
            return None
        self._ensure_tables()
        if self._exp is not None:
            w = self._exp[(self.order - 1) // 3]
        else:
            w = self._pow_poly(self._find_generator(), (self.order - 1) // 3)
        return min(w, self.mul(w, w))

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and other.p == self.p
                and other.k == self.k and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("GF", self.p, self.k, self.modulus))


@lru_cache(maxsize=None)
def _make_cached(p: int, k: int, modulus):
    if p == 0:
        return QQ
    if k == 1:
        return PrimeField(p)
    if modulus is None:
        modulus = default_modulus(p, k)
    return ExtensionField(p, k, modulus)


def field_make(p: int, k: int = 1, modulus=None) -> Field:
    """Construct a coefficient field.

    ``field_make(0, 1)`` is the rationals.  ``field_make(p, 1)`` is GF(p).
    ``field_make(p, k)`` is GF(p^k) with the canonical modulus unless one
    is supplied.  A modulus is rejected for k = 1.
    """
    if p == 0:
        if k != 1 or modulus is not None:
            raise FieldError("characteristic 0 requires k = 1 and no modulus")
        return QQ
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if k < 1:
        raise FieldError("extension degree must be >= 1")
    if k == 1:
        if modulus is not None:
            raise FieldError("modulus is forbidden for a prime field")
        return _make_cached(p, 1, None)
    if modulus is not None:
        modulus = tuple(int(c) for c in modulus)
    return _make_cached(p, k, modulus)


def field_for_order(q: int) -> Field:
    """The field with q elements (canonical modulus for prime powers)."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            qq = q
            while qq % p == 0:
                qq //= p
                k += 1
            if qq != 1:
                raise FieldError(f"{q} is not a prime power")
            return field_make(p, k)
    raise FieldError(f"{q} is not a prime power")


def as_element(field: Field, x):
    """Interpret user input as a field element.

    Integers are residues for the rationals and prime fields.  For an
    extension field an integer in range(q) is taken verbatim as the
    encoded element (the base-p digit encoding); anything else must be a
    Fraction, which coerces through the prime subfield.
    """
    if isinstance(x, Fraction):
        return field.coerce(x)
    if not isinstance(x, int):
        return x  # already an element
    if field.order is None or field.k == 1:
        return field.coerce(x)
    if 0 <= x < field.order:
        return x
    raise FieldError(
        f"integer {x} is ambiguous over {field!r}: pass an encoding in "
        f"range({field.order}) or a Fraction")


def embed_scalar(a, source: Field, target: Field):
    """Carry a scalar from ``source`` into ``target``.

    Supported embeddings: identity, rationals into anything, and a prime
    field into any extension of the same characteristic (the prime
    subfield maps to the constant digits of the encoding).
    """
    if source == target:
        return a
    if isinstance(source, RationalField):
        return target.coerce(a)
    if source.k == 1 and source.p == target.p:
        return a % source.p
    raise FieldError(f"no canonical embedding {source!r} -> {target!r}")

"""Sparse multivariate polynomials and unreduced rational functions.

A :class:`MultiPoly` stores a map from exponent vectors (tuples aligned
with a fixed, ordered variable list) to nonzero coefficients of a
:class:`~burkhardt.fields.Field`.  Equality is structural; the canonical
term order is graded lexicographic on the declared variable order.

:class:`RatFunc` is a numerator/denominator pair that is never reduced;
equality is decided by cross-multiplication.  This suffices for every
identity in the package and avoids multivariate gcd entirely.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BurkhardtError, FieldError
from .fields import QQ, Field


def _grlex_key(exps):
    return (sum(exps), exps)


class MultiPoly:
    """A sparse polynomial over a fixed field and variable list."""

    __slots__ = ("field", "vars", "terms")

    def __init__(self, field: Field, variables, terms=None, _clean=False):
        self.field = field
        self.vars = tuple(variables)
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            zero = field.zero
            self.terms = {e: c for e, c in terms.items() if c != zero}

    # -- constructors --

    @classmethod
    def zero(cls, field, variables):
        return cls(field, variables, {}, _clean=True)

    @classmethod
    def const(cls, field, variables, value):
        value = field.coerce(value) if isinstance(value, (int, Fraction)) else value
        n = len(tuple(variables))
        if value == field.zero:
            return cls.zero(field, variables)
        return cls(field, variables, {(0,) * n: value}, _clean=True)

    @classmethod
    def const_elem(cls, field, variables, element):
        """Constant polynomial from an element already in the field."""
        n = len(tuple(variables))
        if element == field.zero:
            return cls.zero(field, variables)
        return cls(field, variables, {(0,) * n: element}, _clean=True)

    @classmethod
    def variable(cls, field, variables, name):
        variables = tuple(variables)
        i = variables.index(name)
        e = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(field, variables, {e: field.one}, _clean=True)

    @classmethod
    def gens(cls, field, variables):
        variables = tuple(variables)
        return [cls.variable(field, variables, v) for v in variables]

    # -- basic queries --

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def constant_value(self):
        """The coefficient field element, for a constant polynomial."""
        if not self.terms:
            return self.field.zero
        if len(self.terms) == 1:
            (e, c), = self.terms.items()
            if sum(e) == 0:
                return c
        raise BurkhardtError("polynomial is not constant")

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.field.zero)

    def leading_term(self):
        """(exponent, coefficient) maximal in graded lex order."""
        if not self.terms:
            raise BurkhardtError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    # -- ring operations --

    def _check_compatible(self, other):
        if self.field != other.field:
            raise FieldError("polynomials over different fields")
        if self.vars != other.vars:
            raise BurkhardtError(
                f"variable lists differ: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.field, self.vars, other)
        self._check_compatible(other)
        res = dict(self.terms)
        if self.field is QQ:
            for e, c in other.terms.items():
                s = res.get(e, 0) + c
                if s == 0:
                    res.pop(e, None)
                else:
                    res[e] = s
        else:
            add = self.field.add
            zero = self.field.zero
            for e, c in other.terms.items():
                s = add(res.get(e, zero), c)
                if s == zero:
                    res.pop(e, None)
                else:
                    res[e] = s
        return MultiPoly(self.field, self.vars, res, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        neg = self.field.neg
        return MultiPoly(self.field, self.vars,
                         {e: neg(c) for e, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.field, self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check_compatible(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        res = {}
        if self.field is QQ:
            # direct int/Fraction arithmetic, no indirection
            get = res.get
            for ea, ca in a.items():
                for eb, cb in b.items():
                    e = tuple(map(sum, zip(ea, eb)))
                    prev = get(e)
                    if prev is None:
                        res[e] = ca * cb
                    else:
                        s = prev + ca * cb
                        if s == 0:
                            del res[e]
                        else:
                            res[e] = s
        else:
            mul = self.field.mul
            add = self.field.add
            zero = self.field.zero
            get = res.get
            for ea, ca in a.items():
                for eb, cb in b.items():
                    e = tuple(map(sum, zip(ea, eb)))
                    c = mul(ca, cb)
                    prev = get(e)
                    if prev is None:
                        if c != zero:
                            res[e] = c
                    else:
                        s = add(prev, c)
                        if s == zero:
                            del res[e]
                        else:
                            res[e] = s
        return MultiPoly(self.field, self.vars, res, _clean=True)

    __rmul__ = __mul__

    def scale(self, scalar):
        """Multiply by an integer or rational (coerced into the field)."""
        c = self.field.coerce(scalar) if isinstance(scalar, (int, Fraction)) else scalar
        return self.scale_elem(c)

    def scale_elem(self, element):
        """Multiply by an element already living in the field."""
        if element == self.field.zero:
            return MultiPoly.zero(self.field, self.vars)
        if self.field is QQ:
            return MultiPoly(self.field, self.vars,
                             {e: cc * element for e, cc in self.terms.items()},
                             _clean=True)
        mul = self.field.mul
        return MultiPoly(self.field, self.vars,
                         {e: mul(cc, element) for e, cc in self.terms.items()},
                         _clean=True)

    def __pow__(self, n: int):
        if n < 0:
            raise BurkhardtError("negative polynomial power")
        result = MultiPoly.const(self.field, self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (self.field == other.field and self.vars == other.vars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field, self.vars, frozenset(self.terms.items())))

    # -- calculus and substitution --

    def derivative(self, name: str):
        i = self.vars.index(name)
        field = self.field
        res = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            coeff = field.mul(c, field.coerce(e[i]))
            if coeff == field.zero:
                continue
            ne = e[:i] + (e[i] - 1,) + e[i + 1:]
            prev = res.get(ne)
            res[ne] = field.add(prev, coeff) if prev is not None else coeff
        return MultiPoly(field, self.vars, res)

    def evaluate(self, point):
        """Value at a point given as a sequence of field elements.

        Integers and Fractions are coerced; a Fraction whose denominator
        dies in the field raises FieldError.
        """
        if len(point) != len(self.vars):
            raise BurkhardtError(
                f"expected {len(self.vars)} coordinates, got {len(point)}")
        field = self.field
        vals = [field.coerce(x) if isinstance(x, (int, Fraction)) else x
                for x in point]
        maxes = [0] * len(self.vars)
        for e in self.terms:
            for i, ei in enumerate(e):
                if ei > maxes[i]:
                    maxes[i] = ei
        powers = []
        for v, m in zip(vals, maxes):
            row = [field.one]
            for _ in range(m):
                row.append(field.mul(row[-1], v))
            powers.append(row)
        total = field.zero
        mul = field.mul
        add = field.add
        for e, c in self.terms.items():
            acc = c
            for i, ei in enumerate(e):
                if ei:
                    acc = mul(acc, powers[i][ei])
            total = add(total, acc)
        return total

    def evaluate_elems(self, vals):
        """Value at a point whose coordinates are already field elements.

        Skips coercion; used by enumeration loops where extension-field
        elements are integer encodings that must not be reinterpreted.
        """
        field = self.field
        maxes = [0] * len(self.vars)
        for e in self.terms:
            for i, ei in enumerate(e):
                if ei > maxes[i]:
                    maxes[i] = ei
        powers = []
        for v, m in zip(vals, maxes):
            row = [field.one]
            for _ in range(m):
                row.append(field.mul(row[-1], v))
            powers.append(row)
        total = field.zero
        mul = field.mul
        add = field.add
        for e, c in self.terms.items():
            acc = c
            for i, ei in enumerate(e):
                if ei:
                    acc = mul(acc, powers[i][ei])
            total = add(total, acc)
        return total

    def substitute(self, mapping, power_cache=None):
        """Substitute polynomials (or scalars) for variables.

        ``mapping`` maps variable names to MultiPoly values sharing one
        target variable list; unmapped variables must exist in the target
        list and pass through unchanged.  ``power_cache`` (a dict) may be
        passed to share image powers across several substitutions with
        the same mapping values.
        """
        field = self.field
        target_vars = None
        for name, val in mapping.items():
            if isinstance(val, (int, Fraction)):
                continue
            if target_vars is None:
                target_vars = val.vars
            elif val.vars != target_vars:
                raise BurkhardtError("substitution images disagree on variables")
            if val.field != field:
                raise FieldError("substitution images over a different field")
        if target_vars is None:
            target_vars = self.vars
        subs = {}
        for name, val in mapping.items():
            if isinstance(val, (int, Fraction)):
                subs[name] = MultiPoly.const(field, target_vars, val)
            else:
                subs[name] = val
        occurring = set()
        for e in self.terms:
            for v, ei in zip(self.vars, e):
                if ei:
                    occurring.add(v)
        images = []
        for v in self.vars:
            if v in subs:
                images.append(subs[v])
            elif v not in occurring:
                images.append(None)  # never touched below
            else:
                if v not in target_vars:
                    raise BurkhardtError(f"variable {v} missing from target")
                images.append(MultiPoly.variable(field, target_vars, v))
        if power_cache is None:
            power_cache = {}

        def power(i, e):
            key = (self.vars[i], e)
            got = power_cache.get(key)
            if got is None:
                if e == 1:
                    got = images[i]
                else:
                    half = power(i, e // 2)
                    got = half * half
                    if e % 2:
                        got = got * images[i]
                power_cache[key] = got
            return got

        # accumulate into a mutable dict to avoid quadratic re-adding
        acc_terms = {}
        zero = field.zero
        add = field.add
        for e, c in self.terms.items():
            acc = None
            for i, ei in enumerate(e):
                if ei:
                    acc = power(i, ei) if acc is None else acc * power(i, ei)
            if acc is None:
                piece = {(0,) * len(target_vars): c}
            else:
                piece = acc.scale(c).terms
            for pe, pc in piece.items():
                s = add(acc_terms.get(pe, zero), pc)
                if s == zero:
                    acc_terms.pop(pe, None)
                else:
                    acc_terms[pe] = s
        return MultiPoly(field, target_vars, acc_terms, _clean=True)

    # -- structure changes --

    def map_field(self, new_field: Field):
        """Recoerce coefficients into another field.

        Rational coefficients are cleared into finite fields eagerly; a
        denominator divisible by the characteristic raises FieldError.
        """
        res = {}
        zero = new_field.zero
        for e, c in self.terms.items():
            nc = new_field.coerce(c)
            if nc != zero:
                res[e] = nc
        return MultiPoly(new_field, self.vars, res, _clean=True)

    def rename_vars(self, mapping):
        new_vars = tuple(mapping.get(v, v) for v in self.vars)
        if len(set(new_vars)) != len(new_vars):
            raise BurkhardtError("renaming collides")
        return MultiPoly(self.field, new_vars, dict(self.terms), _clean=True)

    def with_vars(self, new_vars):
        """Reinterpret over a superset/permutation of the variables."""
        new_vars = tuple(new_vars)
        idx = []
        for v in self.vars:
            if v not in new_vars:
                raise BurkhardtError(f"variable {v} missing from {new_vars}")
            idx.append(new_vars.index(v))
        n = len(new_vars)
        res = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, ei in enumerate(e):
                ne[idx[i]] = ei
            res[tuple(ne)] = c
        return MultiPoly(self.field, new_vars, res, _clean=True)

    def drop_vars(self, names):
        """Remove variables that do not occur in any term."""
        drop = set(names)
        keep = [i for i, v in enumerate(self.vars) if v not in drop]
        for e in self.terms:
            for i, v in enumerate(self.vars):
                if v in drop and e[i]:
                    raise BurkhardtError(f"variable {v} still occurs")
        new_vars = tuple(self.vars[i] for i in keep)
        res = {tuple(e[i] for i in keep): c for e, c in self.terms.items()}
        return MultiPoly(self.field, new_vars, res, _clean=True)

    def content(self) -> int:
        """gcd of integer coefficients (rational field, integral entries)."""
        if self.field != QQ:
            raise BurkhardtError("content is defined over the rationals")
        from math import gcd
        g = 0
        for c in self.terms.values():
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise BurkhardtError("content requires integer coefficients")
                c = c.numerator
            g = gcd(g, abs(c))
        return g

    def divexact_scalar(self, scalar):
        inv = self.field.inv(self.field.coerce(scalar))
        return self.scale(inv)

    # -- exact division --

    def divmod_poly(self, divisor: MultiPoly):
        """Single-divisor division with remainder in graded lex order."""
        self._check_compatible(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        field = self.field
        de, dc = divisor.leading_term()
        dc_inv = field.inv(dc)
        quotient = {}
        rem = {}
        work = dict(self.terms)
        while work:
            e = max(work, key=_grlex_key)
            c = work[e]
            if all(x >= y for x, y in zip(e, de)):
                qe = tuple(x - y for x, y in zip(e, de))
                qc = field.mul(c, dc_inv)
                quotient[qe] = field.add(quotient.get(qe, field.zero), qc)
                # subtract qc * x^qe * divisor; the lead cancels exactly
                for fe, fc in divisor.terms.items():
                    te = tuple(x + y for x, y in zip(qe, fe))
                    val = field.sub(work.get(te, field.zero), field.mul(qc, fc))
                    if val == field.zero:
                        work.pop(te, None)
                    else:
                        work[te] = val
            else:
                rem[e] = c
                del work[e]
        q = MultiPoly(field, self.vars, quotient)
        r = MultiPoly(field, self.vars, rem)
        return q, r

    def divexact(self, divisor: MultiPoly):
        q, r = self.divmod_poly(divisor)
        if not r.is_zero():
            raise BurkhardtError("division is not exact")
        return q

    # -- formatting --

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v
                for v, k in zip(self.vars, e) if k > 0)
            cs = _coeff_str(c)
            if mono:
                if cs == "1":
                    piece = mono
                elif cs == "-1":
                    piece = "-" + mono
                else:
                    piece = f"{cs}*{mono}"
            else:
                piece = cs
            parts.append(piece)
        out = parts[0]
        for piece in parts[1:]:
            if piece.startswith("-"):
                out += " - " + piece[1:]
            else:
                out += " + " + piece
        return out

    def __repr__(self):
        return f"MultiPoly({self})"


def _coeff_str(c):
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return str(c.numerator)
        return f"{c.numerator}/{c.denominator}"
    return str(c)


class RatFunc:
    """An unreduced fraction of polynomials; equality by cross-multiplying."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = MultiPoly.const(num.field, num.vars, 1)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        num._check_compatible(den)
        self.num = num
        self.den = den

    @classmethod
    def from_scalar(cls, field, variables, value):
        return cls(MultiPoly.const(field, variables, value))

    def __add__(self, other):
        other = self._lift(other)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def _lift(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MultiPoly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.from_scalar(self.num.field, self.num.vars, other)
        raise BurkhardtError(f"cannot combine RatFunc with {other!r}")

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            other = self._lift(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self):
        raise TypeError("RatFunc is unhashable (equality is not structural)")

    def is_zero(self):
        return self.num.is_zero()

    def as_poly(self):
        """The underlying polynomial when the denominator is constant."""
        c = self.den.constant_value()
        return self.num.scale_by_inverse(c)

    def evaluate(self, point):
        den = self.den.evaluate(point)
        field = self.num.field
        if den == field.zero:
            raise ZeroDivisionError("denominator vanishes at the point")
        return field.mul(self.num.evaluate(point), field.inv(den))

    def __str__(self):
        den_str = str(self.den)
        if den_str == "1":
            return str(self.num)
        return f"({self.num})/({den_str})"

    __repr__ = __str__


def _scale_by_inverse(poly: MultiPoly, c):
    return poly.scale(poly.field.inv(c))


MultiPoly.scale_by_inverse = _scale_by_inverse


# ---------------------------------------------------------------------------
# text grammar
# ---------------------------------------------------------------------------

def _tokenize(text: str):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("num", int(text[i:j])))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and (text[j].isalnum()):
                j += 1
            tokens.append(("name", text[i:j]))
            i = j
        elif text.startswith("**", i):
            tokens.append(("op", "^"))
            i += 2
        elif ch in "+-*/^()":
            tokens.append(("op", ch))
            i += 1
        else:
            raise BurkhardtError(f"unexpected character {ch!r} in polynomial text")
    return tokens


class _Parser:
    def __init__(self, tokens, field, variables):
        self.tokens = tokens
        self.pos = 0
        self.field = field
        self.vars = tuple(variables)

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> RatFunc:
        value = self.expr()
        if self.pos != len(self.tokens):
            raise BurkhardtError("trailing tokens in polynomial text")
        return value

    def expr(self):
        kind, val = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.take()
            negate = val == "-"
        value = self.term()
        if negate:
            value = -value
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                value = value - rhs if val == "-" else value + rhs
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.factor()
                value = value * rhs if val == "*" else value / rhs
            else:
                return value

    def factor(self):
        kind, val = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return -self.factor()
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind2, exp = self.take()
            if kind2 != "num":
                raise BurkhardtError("exponent must be a nonnegative integer")
            return base ** exp
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return RatFunc.from_scalar(self.field, self.vars, val)
        if kind == "name":
            if val not in self.vars:
                raise BurkhardtError(f"unknown variable {val!r}")
            return RatFunc(MultiPoly.variable(self.field, self.vars, val))
        if kind == "op" and val == "(":
            value = self.expr()
            kind2, val2 = self.take()
            if (kind2, val2) != ("op", ")"):
                raise BurkhardtError("unbalanced parentheses")
            return value
        raise BurkhardtError(f"unexpected token {val!r}")


def parse_ratfunc(text: str, variables, field: Field = QQ) -> RatFunc:
    """Parse an expression with +, -, *, /, ^ into a rational function."""
    return _Parser(_tokenize(text), field, variables).parse()


def parse_poly(text: str, variables, field: Field = QQ) -> MultiPoly:
    """Parse polynomial text; division is only allowed by constants."""
    rf = parse_ratfunc(text, variables, field)
    c = rf.den.constant_value()  # raises if denominator is non-constant
    return rf.num.scale_by_inverse(c)


# ---------------------------------------------------------------------------
# determinants and small closed formulas
# ---------------------------------------------------------------------------

def poly_matrix_det(matrix) -> MultiPoly:
    """Exact determinant of a square matrix of MultiPoly entries.

    Laplace expansion along the first remaining row, memoized on column
    subsets: exact, alloc-light, and fine for the 5x5 matrices used here.
    """
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise BurkhardtError("matrix is not square")
    if n == 0:
        raise BurkhardtError("empty matrix")
    proto = matrix[0][0]
    field, variables = proto.field, proto.vars
    for row in matrix:
        for entry in row:
            if entry.field != field or entry.vars != variables:
                raise BurkhardtError("matrix entries disagree on field/variables")
    cache = {}

    def minor(row, cols):
        if len(cols) == 1:
            return matrix[row][cols[0]]
        key = cols
        got = cache.get((row, key))
        if got is not None:
            return got
        acc = MultiPoly.zero(field, variables)
        sign = 1
        for i, c in enumerate(cols):
            entry = matrix[row][c]
            if not entry.is_zero():
                sub = minor(row + 1, cols[:i] + cols[i + 1:])
                piece = entry * sub
                acc = acc + piece if sign > 0 else acc - piece
            sign = -sign
        cache[(row, key)] = acc
        return acc

    return minor(0, tuple(range(n)))


def cubic_discriminant(a, b, c, d):
    """Discriminant of a*w^3 + b*w^2 + c*w + d in any commutative setting.

    Returns 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2; the arguments may
    be MultiPoly (sharing field/vars) or scalars combined with them.
    """
    return (18 * a * b * c * d - 4 * b ** 3 * d + b ** 2 * c ** 2
            - 4 * a * c ** 3 - 27 * a ** 2 * d ** 2)


def poly_eval(p: MultiPoly, point):
    """Exact value of p at a coordinate vector (spec-level convenience)."""
    return p.evaluate(point)

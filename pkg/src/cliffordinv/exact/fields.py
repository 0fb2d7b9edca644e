"""Exact scalars: the quadratic field Q(sqrt 2) and cyclotomic fields Q(zeta_n).

Elements are stored as a tuple of integer coordinates over a fixed
Q-basis plus one positive common denominator, always reduced so that
``gcd(coords..., den) == 1``.  That makes the ``(coords, den)`` pair a
canonical encoding of the value, which the group-closure code relies on.

Rationals are plain :class:`fractions.Fraction`; every element here mixes
freely with ``int`` and ``Fraction`` operands.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

__all__ = [
    "NumberField",
    "FieldElement",
    "SqrtTwo",
    "Cyclotomic",
    "QSQRT2",
    "cyclotomic_field",
    "cyclotomic_polynomial",
    "zeta",
    "sqrt2",
    "conj",
    "canonical_hash",
    "to_complex",
    "is_rational",
    "as_fraction",
]


def _gcd_all(values, start=0):
    g = start
    for v in values:
        g = math.gcd(g, v)
        if g == 1:
            return 1
    return g


class NumberField:
    """A number field with a fixed integral Q-basis and integer structure constants.

    ``table[i][j]`` holds the coordinates of ``basis_i * basis_j``;
    ``conj_cols[i]`` holds the coordinates of the complex conjugate of ``basis_i``.
    """

    def __init__(self, key, degree, table, conj_cols, basis_values, element_class):
        self.key = key
        self.degree = degree
        self.table = table
        self.conj_cols = conj_cols
        self.basis_values = tuple(complex(b) for b in basis_values)
        self.element_class = element_class
        # sparse form of the multiplication tensor: (i, j, k, coefficient)
        self._triples = tuple(
            (i, j, k, table[i][j][k])
            for i in range(degree)
            for j in range(degree)
            for k in range(degree)
            if table[i][j][k]
        )

    def __repr__(self):
        return f"NumberField({self.key})"

    def mul_coords(self, a, b):
        out = [0] * self.degree
        for i, j, k, t in self._triples:
            ai = a[i]
            if ai:
                bj = b[j]
                if bj:
                    out[k] += t * ai * bj
        return out

    def element(self, coords, den=1):
        return self.element_class._make(self, tuple(coords), den)

    def zero(self):
        return self.element((0,) * self.degree)

    def one(self):
        return self.element((1,) + (0,) * (self.degree - 1))

    def coerce(self, x):
        if isinstance(x, FieldElement):
            if x.field is not self:
                raise ValueError(f"field mismatch: {x.field.key} vs {self.key}")
            return x
        if isinstance(x, int):
            return self.element((x,) + (0,) * (self.degree - 1))
        if isinstance(x, _RationalABC):
            return self.element((x.numerator,) + (0,) * (self.degree - 1), x.denominator)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self.key}")


class FieldElement:
    __slots__ = ("field", "num", "den", "_hash")

    @classmethod
    def _make(cls, field, num, den=1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num = tuple(-c for c in num)
            den = -den
        g = _gcd_all(num, den)
        if g != 1:
            num = tuple(c // g for c in num)
            den //= g
        obj = object.__new__(cls)
        obj.field = field
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    # -- coercion ---------------------------------------------------------
    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError(
                    f"field mismatch: {self.field.key} vs {other.field.key}"
                )
            return other
        if isinstance(other, (int, _RationalABC)):
            return self.field.coerce(other)
        return None

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        d1, d2 = self.den, o.den
        if d1 == d2:
            return self._make(self.field, tuple(a + b for a, b in zip(self.num, o.num)), d1)
        return self._make(
            self.field, tuple(a * d2 + b * d1 for a, b in zip(self.num, o.num)), d1 * d2
        )

    __radd__ = __add__

    def __neg__(self):
        return self._make(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._make(self.field, tuple(a * other for a in self.num), self.den)
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._make(self.field, tuple(self.field.mul_coords(self.num, o.num)), self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if not any(self.num):
            raise ZeroDivisionError("division by zero in " + self.field.key)
        # solve (multiplication-by-self) * x = 1 over Q
        n = self.field.degree
        cols = [self.field.mul_coords(self.num, tuple(int(i == j) for i in range(n))) for j in range(n)]
        rows = [[Fraction(cols[j][i]) for j in range(n)] + [Fraction(int(i == 0))] for i in range(n)]
        for c in range(n):
            piv = next(r for r in range(c, n) if rows[r][c] != 0)
            rows[c], rows[piv] = rows[piv], rows[c]
            inv = 1 / rows[c][c]
            rows[c] = [v * inv for v in rows[c]]
            for r in range(n):
                if r != c and rows[r][c] != 0:
                    f = rows[r][c]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[c])]
        sol = [rows[i][n] * self.den for i in range(n)]
        common = math.lcm(*(s.denominator for s in sol))
        return self._make(self.field, tuple(int(s * common) for s in sol), common)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self):
        n = self.field.degree
        out = [0] * n
        for i, a in enumerate(self.num):
            if a:
                col = self.field.conj_cols[i]
                for k in range(n):
                    out[k] += a * col[k]
        return self._make(self.field, tuple(out), self.den)

    # -- predicates / conversions -------------------------------------------
    def __bool__(self):
        return any(self.num)

    def is_rational(self):
        return not any(self.num[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def __complex__(self):
        return sum(c * b for c, b in zip(self.num, self.field.basis_values)) / self.den

    def coords(self):
        """Coordinates over the field basis as Fractions."""
        return tuple(Fraction(c, self.den) for c in self.num)

    def canonical_hash(self):
        return (
            f"{self.field.key}|{self.den}|" + ",".join(map(str, self.num))
        ).encode()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.num == other.num and self.den == other.den
        if isinstance(other, (int, _RationalABC)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            if self.is_rational():
                h = hash(Fraction(self.num[0], self.den))
            else:
                h = hash((self.field.key, self.num, self.den))
            self._hash = h
        return h

    def __reduce__(self):
        return (self.field.element, (self.num, self.den))


class SqrtTwo(FieldElement):
    """``a + b*sqrt(2)`` with rational ``a``, ``b``."""

    __slots__ = ()

    def __new__(cls, a=0, b=0):
        a, b = Fraction(a), Fraction(b)
        den = math.lcm(a.denominator, b.denominator)
        return cls._make(QSQRT2, (int(a * den), int(b * den)), den)

    @property
    def a(self):
        return Fraction(self.num[0], self.den)

    @property
    def b(self):
        return Fraction(self.num[1], self.den)

    def inverse(self):
        a, b = self.num
        norm = a * a - 2 * b * b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt2)")
        # (a + b r)/den inverted is den (a - b r) / norm
        return self._make(QSQRT2, (a * self.den, -b * self.den), norm)

    def norm(self):
        return self.a * self.a - 2 * self.b * self.b

    def __repr__(self):
        return f"SqrtTwo({self.a}, {self.b})"

    def __str__(self):
        a, b = self.a, self.b
        if not b:
            return str(a)
        bs = "√2" if b == 1 else ("-√2" if b == -1 else f"{b}*√2")
        if not a:
            return bs
        return f"{a}{'' if bs.startswith('-') else '+'}{bs}"


class Cyclotomic(FieldElement):
    """Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1)."""

    __slots__ = ()

    def __new__(cls, n, coeffs):
        field = cyclotomic_field(n)
        if len(coeffs) != field.degree:
            raise ValueError(f"expected {field.degree} coefficients for conductor {n}")
        fr = [Fraction(c) for c in coeffs]
        den = math.lcm(*(f.denominator for f in fr))
        return cls._make(field, tuple(int(f * den) for f in fr), den)

    @property
    def conductor(self):
        return self.field.conductor

    def __repr__(self):
        return f"Cyclotomic({self.conductor}, {[str(c) for c in self.coords()]})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coords()):
            if c:
                if k == 0:
                    parts.append(str(c))
                else:
                    z = f"ζ{self.conductor}" + (f"^{k}" if k > 1 else "")
                    parts.append(z if c == 1 else ("-" + z if c == -1 else f"{c}*{z}"))
        return "+".join(parts).replace("+-", "-") or "0"


# ---------------------------------------------------------------------------
# field construction

def _sqrt2_field():
    table = [
        [[1, 0], [0, 1]],
        [[0, 1], [2, 0]],
    ]
    conj_cols = [[1, 0], [0, 1]]
    return NumberField("QSqrt2", 2, table, conj_cols, [1, math.sqrt(2)], SqrtTwo)


QSQRT2 = _sqrt2_field()


def _poly_divmod(num, den):
    """Exact integer polynomial division by a monic divisor; lowest degree first."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1]
        if c:
            q[shift] = c
            for i, d in enumerate(den):
                num[shift + i] -= c * d
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Integer coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


@lru_cache(maxsize=None)
def cyclotomic_field(n):
    if n < 1:
        raise ValueError("conductor must be positive")
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1

    # reduced coordinates of zeta^k for 0 <= k < n
    powers = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(n):
        powers.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(deg):
                cur[i] -= top * phi[i]
    table = [[list(powers[(i + j) % n]) for j in range(deg)] for i in range(deg)]
    conj_cols = [list(powers[(-i) % n]) for i in range(deg)]
    basis_values = [cmath.exp(2j * math.pi * k / n) for k in range(deg)]
    field = NumberField(f"Q(zeta{n})", deg, table, conj_cols, basis_values, Cyclotomic)
    field.conductor = n
    field.powers = tuple(powers)
    return field


def zeta(n, k=1):
    """zeta_n ** k as a Cyclotomic element."""
    field = cyclotomic_field(n)
    return field.element(field.powers[k % n])


def sqrt2():
    return SqrtTwo(0, 1)


def sqrt2_in(n):
    """sqrt(2) inside Q(zeta_n); requires 8 | n."""
    if n % 8:
        raise ValueError("sqrt(2) lies in Q(zeta_n) only when 8 divides n")
    return zeta(n, n // 8) + zeta(n, -(n // 8))


def embed_sqrt2(x, n=8):
    """Embed an element of Q(sqrt 2) (or a rational) into Q(zeta_n)."""
    if isinstance(x, SqrtTwo):
        return x.a + x.b * sqrt2_in(n)
    return cyclotomic_field(n).coerce(x)


# ---------------------------------------------------------------------------
# scalar helpers shared by Fraction / int / FieldElement

def conj(x):
    if isinstance(x, FieldElement):
        return x.conj()
    return x


def is_rational(x):
    if isinstance(x, FieldElement):
        return x.is_rational()
    return isinstance(x, (int, _RationalABC))


def as_fraction(x):
    if isinstance(x, FieldElement):
        return x.to_fraction()
    return Fraction(x)


def simplify(x):
    """Collapse rational field elements to Fraction; leave the rest alone."""
    if isinstance(x, FieldElement) and x.is_rational():
        return Fraction(x.num[0], x.den)
    return x


def canonical_hash(x):
    if isinstance(x, FieldElement):
        return x.canonical_hash()
    f = Fraction(x)
    return f"Q|{f.denominator}|{f.numerator}".encode()


def to_complex(x):
    return complex(x)

"""Dense square matrices over an exact scalar type."""

from __future__ import annotations

from fractions import Fraction

from .fields import FieldElement, canonical_hash, conj, simplify

__all__ = ["ExactMatrix", "berkowitz"]


def _is_zero(x):
    return not x


class ExactMatrix:
    """Immutable square matrix; entries are ints, Fractions or FieldElements."""

    __slots__ = ("rows", "dim", "_hash")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("ExactMatrix must be square")
        self.rows = rows
        self.dim = n
        self._hash = None

    # -- constructors -----------------------------------------------------------
    @classmethod
    def identity(cls, n, one=1):
        return cls([[one if i == j else 0 * one for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, entries):
        entries = list(entries)
        n = len(entries)
        zero = 0 * entries[0] if entries else 0
        return cls([[entries[i] if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def permutation(cls, images):
        """Matrix sending basis vector ``j`` to basis vector ``images[j]``."""
        n = len(images)
        rows = [[0] * n for _ in range(n)]
        for j, i in enumerate(images):
            rows[i][j] = 1
        return cls(rows)

    # -- basic protocol -------------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __repr__(self):
        return "ExactMatrix([" + ", ".join(
            "[" + ", ".join(str(x) for x in r) + "]" for r in self.rows
        ) + "])"

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def canonical_hash(self):
        return b";".join(b",".join(canonical_hash(x) for x in r) for r in self.rows)

    # -- arithmetic ---------------------------------------------------------------------
    def __matmul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = 0
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return ExactMatrix(out)

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            return self @ other
        return ExactMatrix([[x * other for x in r] for r in self.rows])

    def __rmul__(self, other):
        return ExactMatrix([[other * x for x in r] for r in self.rows])

    def __add__(self, other):
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return ExactMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return ExactMatrix([[-x for x in r] for r in self.rows])

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = ExactMatrix.identity(self.dim)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def transpose(self):
        return ExactMatrix(zip(*self.rows))

    def conj_transpose(self):
        return ExactMatrix([[conj(x) for x in c] for c in zip(*self.rows)])

    def kron(self, other):
        n, k = self.dim, other.dim
        return ExactMatrix(
            [
                [self.rows[i // k][j // k] * other.rows[i % k][j % k] for j in range(n * k)]
                for i in range(n * k)
            ]
        )

    def map(self, fn):
        return ExactMatrix([[fn(x) for x in r] for r in self.rows])

    def simplify(self):
        return self.map(simplify)

    def is_identity(self):
        return all(
            (x == 1) if i == j else _is_zero(x)
            for i, r in enumerate(self.rows)
            for j, x in enumerate(r)
        )

    def is_unitary(self):
        """``M M* == I`` exactly (orthogonality for real entries)."""
        return (self @ self.conj_transpose()).is_identity()

    def is_monomial(self):
        """Exactly one nonzero entry in every row and every column."""
        if any(sum(1 for x in r if x) != 1 for r in self.rows):
            return False
        return all(sum(1 for x in c if x) == 1 for c in zip(*self.rows))

    def trace(self):
        acc = 0
        for i in range(self.dim):
            acc = acc + self.rows[i][i]
        return acc

    # -- elimination-based ops ---------------------------------------------------------
    def inverse(self):
        n = self.dim
        a = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self.rows)]
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            a[c], a[piv] = a[piv], a[c]
            inv = _inv(a[c][c])
            a[c] = [x * inv for x in a[c]]
            for r in range(n):
                if r != c and a[r][c]:
                    f = a[r][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return ExactMatrix([r[n:] for r in a]).simplify()

    def char_poly(self):
        """Coefficients of ``det(lambda*I - A)``, constant term first."""
        return list(reversed(berkowitz(self.rows)))

    def det(self):
        c0 = self.char_poly()[0]
        return c0 if self.dim % 2 == 0 else -c0


def _inv(x):
    if isinstance(x, FieldElement):
        return x.inverse()
    return Fraction(1) / x


def berkowitz(rows):
    """Division-free characteristic polynomial, highest degree first (leading 1).

    Uses the Toeplitz recurrence over leading principal submatrices, so only
    ring operations are needed.
    """
    n = len(rows)
    if n == 0:
        return [1]
    poly = [1, -rows[0][0]]
    for k in range(1, n):
        # A_k = rows[:k][:k], column c = rows[:k][k], row r = rows[k][:k], a = rows[k][k]
        a = rows[k][k]
        col = [rows[i][k] for i in range(k)]
        row = rows[k][:k]
        toeplitz = [1, -a]
        vec = col
        for _ in range(k):
            s = 0
            for x, y in zip(row, vec):
                if x and y:
                    s = s + x * y
            toeplitz.append(-s)
            vec = [
                sum((rows[i][j] * vec[j] for j in range(k) if rows[i][j] and vec[j]), 0)
                for i in range(k)
            ]
        # new poly (degree k+1) = T * poly, T lower-triangular Toeplitz (k+2) x (k+1)
        new = []
        for i in range(k + 2):
            s = 0
            for j in range(max(0, i - (k + 1)), min(i, k) + 1):
                t = toeplitz[i - j]
                p = poly[j]
                if t and p:
                    s = s + t * p
            new.append(s)
        poly = new
    return [simplify(c) for c in poly]

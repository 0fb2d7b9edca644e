"""Generator sets for the extraspecial and Clifford groups.

Basis convention (shared with the enumerators): the basis vector of
``R[F_2^m]`` labelled by ``v = (v_1, ..., v_m)`` sits at index
``v_1 2^(m-1) + ... + v_m``, i.e. big-endian, so the first tensor slot is
the most significant bit.  The same holds for ``F_p^m`` with base ``p``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from ..errors import UnsupportedError
from ..exact import (
    QSQRT2,
    ExactMatrix,
    SqrtTwo,
    cyclotomic_field,
    embed_sqrt2,
    zeta,
)

__all__ = [
    "GroupKind",
    "GroupSpec",
    "QuadraticFormF2",
    "index_to_vector",
    "vector_to_index",
    "extraspecial_generators",
    "extraspecial_p_generators",
    "clifford_generators",
    "real_clifford_generators",
    "complex_clifford_generators",
    "odd_prime_clifford_generators",
    "parabolic_generators",
    "predicted_order",
    "affine_permutation",
    "generators_for",
    "all_quadratic_forms",
]


class GroupKind(str, Enum):
    REAL = "real"
    COMPLEX = "complex"
    ODD_PRIME = "odd_p"
    EXTRASPECIAL = "extraspecial"
    EXTRASPECIAL_P = "extraspecial_p"
    PARABOLIC = "parabolic"


@dataclass(frozen=True)
class GroupSpec:
    kind: GroupKind
    m: int
    p: int = 2

    def __post_init__(self):
        object.__setattr__(self, "kind", GroupKind(self.kind))
        if self.m < 1:
            raise UnsupportedError("m must be at least 1")
        odd = self.kind in (GroupKind.ODD_PRIME, GroupKind.EXTRASPECIAL_P)
        if odd and (self.p == 2 or not _is_prime(self.p)):
            raise UnsupportedError(f"{self.kind.value} needs an odd prime p, got {self.p}")
        if not odd and self.p != 2:
            raise UnsupportedError(f"{self.kind.value} is defined for p = 2 only")

    @property
    def dim(self):
        return self.p**self.m

    @property
    def field(self):
        """The number field that holds the matrix entries."""
        if self.kind in (GroupKind.REAL, GroupKind.EXTRASPECIAL, GroupKind.PARABOLIC):
            return QSQRT2
        if self.kind is GroupKind.COMPLEX:
            return cyclotomic_field(8)
        return cyclotomic_field(4 * self.p)

    @property
    def scalar_tag(self):
        f = self.field
        return "sqrt2" if f is QSQRT2 else f"cyclotomic{f.conductor}"

    def describe(self):
        return {"kind": self.kind.value, "m": self.m, "p": self.p, "dim": self.dim, "scalar": self.scalar_tag}


def _is_prime(n):
    return n >= 2 and all(n % k for k in range(2, int(math.isqrt(n)) + 1))


# ---------------------------------------------------------------------------
# F_p^m indexing

def index_to_vector(idx, m, p=2):
    out = []
    for _ in range(m):
        out.append(idx % p)
        idx //= p
    return tuple(reversed(out))


def vector_to_index(v, p=2):
    idx = 0
    for x in v:
        idx = idx * p + x
    return idx


def affine_permutation(A, b, m, p=2):
    """Permutation matrix of ``v -> A v + b`` on the basis ``e_v``."""
    images = []
    for idx in range(p**m):
        v = index_to_vector(idx, m, p)
        w = tuple((sum(A[i][j] * v[j] for j in range(m)) + b[i]) % p for i in range(m))
        images.append(vector_to_index(w, p))
    return ExactMatrix.permutation(images)


def _gl_generators(m, p):
    """Matrices generating GL(m, p): a primitive scaling, adjacent swaps, one transvection."""
    eye = [[int(i == j) for j in range(m)] for i in range(m)]
    gens = []
    if p > 2:
        g = _primitive_root(p)
        A = [row[:] for row in eye]
        A[0][0] = g
        gens.append(A)
    for i in range(m - 1):
        A = [row[:] for row in eye]
        A[i][i] = A[i + 1][i + 1] = 0
        A[i][i + 1] = A[i + 1][i] = 1
        gens.append(A)
    if m >= 2:
        A = [row[:] for row in eye]
        A[0][1] = 1
        gens.append(A)
    return gens


def _primitive_root(p):
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in range(2, p) if (p - 1) % q == 0 and _is_prime(q)):
            return g
    return 1


@dataclass(frozen=True)
class QuadraticFormF2:
    """``q(v) = sum_{i <= j} Q[i][j] v_i v_j`` over F_2 (upper-triangular bits)."""

    m: int
    Q: tuple

    def __post_init__(self):
        Q = tuple(tuple(int(x) % 2 for x in row) for row in self.Q)
        if len(Q) != self.m or any(len(r) != self.m for r in Q):
            raise ValueError("Q must be m x m")
        if any(Q[i][j] for i in range(self.m) for j in range(i)):
            raise ValueError("Q must be upper triangular")
        object.__setattr__(self, "Q", Q)

    @classmethod
    def product(cls, m, i, j):
        Q = [[0] * m for _ in range(m)]
        a, b = min(i, j), max(i, j)
        Q[a][b] = 1
        return cls(m, tuple(map(tuple, Q)))

    def __call__(self, v):
        m = self.m
        return sum(self.Q[i][j] * v[i] * v[j] for i in range(m) for j in range(i, m)) % 2

    def bilinear(self, x, y):
        s = tuple((a + b) % 2 for a, b in zip(x, y))
        return (self(s) - self(x) - self(y)) % 2

    def diagonal(self, a=0):
        return ExactMatrix.diag(
            [(-1) ** ((self(index_to_vector(i, self.m)) + a) % 2) for i in range(2**self.m)]
        )


# ---------------------------------------------------------------------------
# generator sets

SIGMA1 = ExactMatrix([[0, 1], [1, 0]])
SIGMA2 = ExactMatrix([[1, 0], [0, -1]])


def _slot(g, k, m):
    """``I x ... x g x ... x I`` with ``g`` in tensor slot ``k`` (0-based)."""
    d = g.dim
    left = ExactMatrix.identity(d**k)
    right = ExactMatrix.identity(d ** (m - k - 1))
    return left.kron(g).kron(right)


def _dedupe(gens):
    out, seen = [], set()
    for g in gens:
        key = g.canonical_hash()
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out


def extraspecial_generators(m):
    """``sigma_1`` and ``sigma_2`` in each of the ``m`` tensor slots (2m matrices)."""
    if m < 1:
        raise UnsupportedError("m must be at least 1")
    gens = []
    for k in range(m):
        gens.append(_slot(SIGMA1, k, m))
        gens.append(_slot(SIGMA2, k, m))
    return gens


def _hadamard():
    s = SqrtTwo(0, Fraction(1, 2))
    return ExactMatrix([[s, s], [s, -s]])


def real_clifford_generators(m):
    gens = [_slot(SIGMA1, 0, m), _slot(SIGMA2, 0, m), _slot(_hadamard(), 0, m)]
    zero = (0,) * m
    for A in _gl_generators(m, 2):
        gens.append(affine_permutation(A, zero, m))
    if m >= 2:
        gens.append(QuadraticFormF2.product(m, 0, 1).diagonal())
    eye = [[int(i == j) for j in range(m)] for i in range(m)]
    gens.append(affine_permutation(eye, (1,) + (0,) * (m - 1), m))
    return _dedupe(gens)


def _to_field(g, field):
    if field.key == "QSqrt2":
        return g
    conductor = field.conductor
    return g.map(lambda x: embed_sqrt2(x, conductor))


def complex_clifford_generators(m):
    field = cyclotomic_field(8)
    gens = [_to_field(g, field) for g in real_clifford_generators(m)]
    one = field.one()
    gens.append(_to_field(_slot(ExactMatrix.diag([one, zeta(8, 2)]), 0, m), field))
    gens.append(ExactMatrix.identity(2**m, one) * zeta(8))
    return _dedupe(gens)


def _sqrt_p(p):
    """``sqrt(p)`` inside Q(zeta_{4p}) via the quadratic Gauss sum."""
    n = 4 * p
    g = sum((zeta(n, 4 * x * x) for x in range(p)), cyclotomic_field(n).zero())
    if p % 4 == 1:
        return g
    return -zeta(n, p) * g  # g = i sqrt(p)


def extraspecial_p_generators(m, p):
    """``X: e_x -> e_{x+1}`` and ``Z: e_x -> zeta_p^x e_x`` in each tensor slot."""
    n = 4 * p
    field = cyclotomic_field(n)
    X = ExactMatrix.permutation([(x + 1) % p for x in range(p)]).map(field.coerce)
    Z = ExactMatrix.diag([zeta(n, 4 * x) for x in range(p)])
    gens = []
    for k in range(m):
        gens.append(_slot(X, k, m).map(field.coerce))
        gens.append(_slot(Z, k, m).map(field.coerce))
    return gens


def odd_prime_clifford_generators(m, p):
    n = 4 * p
    field = cyclotomic_field(n)
    coerce = field.coerce
    X = ExactMatrix.permutation([(x + 1) % p for x in range(p)])
    Z = ExactMatrix.diag([zeta(n, 4 * x) for x in range(p)])
    inv_sqrt_p = _sqrt_p(p).inverse()
    F = ExactMatrix([[zeta(n, 4 * x * y) * inv_sqrt_p for y in range(p)] for x in range(p)])
    D = ExactMatrix.diag([zeta(n, 4 * x * x) for x in range(p)])
    gens = [_slot(g, 0, m).map(coerce) for g in (X, Z, F, D)]
    zero = (0,) * m
    for A in _gl_generators(m, p):
        gens.append(affine_permutation(A, zero, m, p).map(coerce))
    eye = [[int(i == j) for j in range(m)] for i in range(m)]
    gens.append(affine_permutation(eye, (1,) + (0,) * (m - 1), m, p).map(coerce))
    a = math.gcd(p + 1, 4)
    gens.append(ExactMatrix.identity(p**m, field.one()) * zeta(n, n // a))
    return _dedupe(gens)


def parabolic_generators(m):
    """Generators of the parabolic subgroup: all ``diag((-1)^(q(v)+a))`` and AGL(m, 2)."""
    gens = [ExactMatrix.identity(2**m) * -1]
    for i in range(m):
        for j in range(i, m):
            gens.append(QuadraticFormF2.product(m, i, j).diagonal())
    zero = (0,) * m
    for A in _gl_generators(m, 2):
        gens.append(affine_permutation(A, zero, m))
    eye = [[int(i == j) for j in range(m)] for i in range(m)]
    for k in range(m):
        b = tuple(int(i == k) for i in range(m))
        gens.append(affine_permutation(eye, b, m))
    return _dedupe(gens)


def clifford_generators(spec):
    spec = spec if isinstance(spec, GroupSpec) else GroupSpec(*spec)
    kind = spec.kind
    if kind is GroupKind.REAL:
        return real_clifford_generators(spec.m)
    if kind is GroupKind.COMPLEX:
        return complex_clifford_generators(spec.m)
    if kind is GroupKind.ODD_PRIME:
        return odd_prime_clifford_generators(spec.m, spec.p)
    raise UnsupportedError(f"clifford_generators does not handle kind {kind.value!r}")


def generators_for(spec):
    """Generators for any supported group kind."""
    if spec.kind is GroupKind.EXTRASPECIAL:
        return extraspecial_generators(spec.m)
    if spec.kind is GroupKind.EXTRASPECIAL_P:
        return extraspecial_p_generators(spec.m, spec.p)
    if spec.kind is GroupKind.PARABOLIC:
        return parabolic_generators(spec.m)
    return clifford_generators(spec)


def _gl_order(m, q):
    out = 1
    for j in range(m):
        out *= q**m - q**j
    return out


def predicted_order(spec):
    m = spec.m
    kind = spec.kind
    if kind is GroupKind.REAL:
        prod = 1
        for j in range(1, m):
            prod *= 4**j - 1
        return 2 ** (m * m + m + 2) * (2**m - 1) * prod
    if kind is GroupKind.COMPLEX:
        prod = 1
        for j in range(1, m + 1):
            prod *= 4**j - 1
        return 2 ** (2 * m + 3) * 2 ** (m * m) * prod
    if kind is GroupKind.EXTRASPECIAL:
        return 2 ** (1 + 2 * m)
    if kind is GroupKind.PARABOLIC:
        return 2 * 2 ** (m * (m + 1) // 2) * 2**m * _gl_order(m, 2)
    raise UnsupportedError(
        f"no order formula for kind {kind.value!r}; the order is verified by closure only"
    )


def all_quadratic_forms(m):
    """Every upper-triangular Q (``2^(m(m+1)/2)`` forms)."""
    cells = [(i, j) for i in range(m) for j in range(i, m)]
    for bits in itertools.product((0, 1), repeat=len(cells)):
        Q = [[0] * m for _ in range(m)]
        for (i, j), b in zip(cells, bits):
            Q[i][j] = b
        yield QuadraticFormF2(m, tuple(map(tuple, Q)))

"""Barnes-Wall lattices, the balanced lattice ``M_m`` and spherical-design tests.

Vectors live in ``Q(sqrt 2)^(2^m)`` with coordinates indexed by
``F_2^m`` (big-endian, like the group generators).  A ``Z[sqrt 2]``-vector
is flattened to ``2 * 2^m`` integers ``(a_0, b_0, a_1, b_1, ...)`` for
``sum (a_i + b_i sqrt 2) e_i``, and modules are compared through the integer
Hermite normal form of that flattening.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import BudgetError, NotClaimedError
from .exact import (
    ExactMatrix,
    FieldElement,
    SqrtTwo,
    cyclotomic_field,
    hermite_normal_form,
    hnf_determinant,
    in_row_lattice,
    sqrt2_in,
)
from .exact.fields import embed_sqrt2
from .groups.generators import GroupKind, GroupSpec, clifford_generators

__all__ = [
    "AffineSubspace",
    "affine_subspaces",
    "chi_vector",
    "LatticeBasis",
    "barnes_wall",
    "balanced_lattice",
    "e8_check",
    "rational_part",
    "verify_rational_part",
    "verify_tensor_decomposition",
    "stabilizes",
    "verify_automorphism_membership",
    "verify_span_maximal_order",
    "rotation_pi_8",
    "DesignReport",
    "design_test",
    "orbit_points",
    "harmonic_basis",
    "harmonic_moments",
    "find_design_point",
]

MAX_LATTICE_GENUS = 4


# ---------------------------------------------------------------------------
# affine subspaces of F_2^m (vectors are ints = big-endian coordinate index)


def _reduce(v, basis):
    for b in basis:
        top = 1 << (b.bit_length() - 1)
        if v & top:
            v ^= b
    return v


def _echelon(vectors):
    """Reduced echelon basis over F_2 (canonical for the span)."""
    basis = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis = sorted([min(b, b ^ v) for b in basis] + [v], reverse=True)
    return tuple(basis)


@dataclass(frozen=True)
class AffineSubspace:
    """``offset + span(directions)`` with the offset reduced modulo the span."""

    m: int
    directions: tuple
    offset: int

    @classmethod
    def make(cls, m, directions, offset=0):
        d = _echelon(directions)
        return cls(m, d, _reduce(offset, d))

    @property
    def dim(self):
        return len(self.directions)

    def points(self):
        pts = {self.offset}
        for b in self.directions:
            pts |= {p ^ b for p in pts}
        return frozenset(pts)

    def __contains__(self, v):
        return _reduce(v ^ self.offset, self.directions) == 0


def affine_subspaces(m, d=None):
    """Every affine subspace of ``F_2^m`` (of dimension ``d`` if given)."""
    dims = range(m + 1) if d is None else [d]
    out = []
    for k in dims:
        seen = set()
        for combo in itertools.combinations(range(1, 2**m), k):
            dirs = _echelon(combo)
            if len(dirs) != k or dirs in seen:
                continue
            seen.add(dirs)
            offsets = sorted({_reduce(a, dirs) for a in range(2**m)})
            out.extend(AffineSubspace(m, dirs, a) for a in offsets)
    return out


def chi_vector(U):
    """0/1 characteristic vector of ``U`` (length ``2^m``)."""
    pts = U.points()
    return tuple(int(v in pts) for v in range(2**U.m))


# ---------------------------------------------------------------------------
# Z[sqrt 2] helpers


def _zs(x):
    """``(a, b)`` integers for ``x = a + b sqrt 2``; None if not in Z[sqrt 2]."""
    if isinstance(x, FieldElement):
        if x.field.key == "QSqrt2":
            a, b = x.a, x.b
        else:
            n = x.field.conductor
            if n % 8:
                return None if not x.is_rational() else _zs(x.to_fraction())
            s = sqrt2_in(n)
            j = next(i for i in range(1, len(s.num)) if s.num[i])
            b = Fraction(x.num[j], x.den) / Fraction(s.num[j], s.den)
            a = Fraction(x.num[0], x.den) - b * Fraction(s.num[0], s.den)
            if a + b * s != x:
                return None
    else:
        a, b = Fraction(x), Fraction(0)
    if a.denominator != 1 or b.denominator != 1:
        return None
    return int(a), int(b)


def _flatten(vec):
    out = []
    for x in vec:
        c = _zs(x)
        if c is None:
            return None
        out.extend(c)
    return out


def _mul(x, y):
    return (x[0] * y[0] + 2 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _sub(x, y):
    return (x[0] - y[0], x[1] - y[1])


def _norm(x):
    return abs(x[0] * x[0] - 2 * x[1] * x[1])


def _round_div(x, y):
    """Nearest element of Z[sqrt 2] to ``x / y``; the remainder has smaller norm."""
    n = y[0] * y[0] - 2 * y[1] * y[1]
    num = _mul(x, (y[0], -y[1]))
    return (round(Fraction(num[0], n)), round(Fraction(num[1], n)))


def _zs_echelon(rows, ncols):
    """Echelon basis of a Z[sqrt 2]-module given by row vectors of (a, b) pairs."""
    zero = (0, 0)
    rows = [list(r) for r in rows if any(x != zero for x in r)]
    basis = []
    for c in range(ncols):
        while True:
            nz = [r for r in rows if r[c] != zero]
            if not nz:
                break
            piv = min(nz, key=lambda r: (_norm(r[c]), r))
            rows.remove(piv)
            nxt = []
            for r in rows:
                if r[c] != zero:
                    q = _round_div(r[c], piv[c])
                    r = [_sub(x, _mul(q, y)) for x, y in zip(r, piv)]
                if any(x != zero for x in r):
                    nxt.append(r)
            rows = nxt
            if all(r[c] == zero for r in rows):
                if piv[c] < zero:
                    piv = [(-a, -b) for a, b in piv]
                basis.append(piv)
                break
            rows.append(piv)
    return basis


# ---------------------------------------------------------------------------
# lattice bases


@dataclass
class LatticeBasis:
    """A lattice given by exact row vectors in the orthonormal frame ``b_v``."""

    name: str
    ring: str  # "Z" or "Z[sqrt2]"
    basis: list
    gram: list
    hnf: list = field(repr=False, default_factory=list)

    @property
    def rank(self):
        return len(self.basis)

    @property
    def dim(self):
        return len(self.basis[0]) if self.basis else 0

    def gram_matrix(self):
        return ExactMatrix(self.gram)

    def det(self):
        return ExactMatrix(self.gram).det()

    def minimum(self):
        """Minimal norm and number of minimal vectors (Z-lattices of rank <= 8)."""
        if self.ring != "Z":
            raise ValueError("minimum is computed for Z-lattices only")
        if self.rank > 8:
            raise BudgetError("short-vector search limited to rank <= 8")
        G = [[int(x) for x in row] for row in self.gram]
        return _short_vectors(G)

    def contains(self, vec):
        flat = _flatten(vec) if self.ring == "Z[sqrt2]" else [Fraction(x) for x in vec]
        if flat is None:
            return False
        return in_row_lattice(self.hnf, flat)

    def to_json(self):
        return {
            "name": self.name,
            "ring": self.ring,
            "rank": self.rank,
            "basis": [[str(x) for x in row] for row in self.basis],
            "gram": [[str(x) for x in row] for row in self.gram],
        }


def _gram(rows):
    out = []
    for u in rows:
        line = []
        for v in rows:
            s = 0
            for a, b in zip(u, v):
                if a and b:
                    s = s + a * b
            if isinstance(s, FieldElement) and s.is_rational():
                s = s.to_fraction()
            if isinstance(s, Fraction) and s.denominator == 1:
                s = int(s)
            line.append(s)
        out.append(line)
    return out


def _short_vectors(G):
    """Exhaustive Fincke-Pohst search for the minimum of an integral Gram matrix."""
    A = np.array(G, dtype=float)
    n = A.shape[0]
    bound = min(G[i][i] for i in range(n))
    L = np.linalg.cholesky(A)  # A = L L^T
    # q(x) = |L^T x|^2; enumerate x_n, ..., x_1 with R = L^T upper triangular
    R = L.T
    best = bound
    found = []
    x = [0] * n

    def rec(i, partial):
        nonlocal best, found
        if i < 0:
            if any(x):
                val = sum(G[a][b] * x[a] * x[b] for a in range(n) for b in range(n))
                if val < best:
                    best = val
                    found = [tuple(x)]
                elif val == best:
                    found.append(tuple(x))
            return
        c = sum(R[i, j] * x[j] for j in range(i + 1, n))
        room = (best + 1e-6 - partial) / (R[i, i] ** 2)
        if room < 0:
            return
        span = math.sqrt(room)
        centre = -c / R[i, i]
        for v in range(math.ceil(centre - span - 1e-9), math.floor(centre + span + 1e-9) + 1):
            x[i] = v
            rec(i - 1, partial + (R[i, i] * v + c) ** 2)
        x[i] = 0

    rec(n - 1, 0.0)
    return best, len(found)


def _bw_generators(m, delta):
    gens = []
    for U in affine_subspaces(m):
        s = 2 ** ((m - U.dim + delta) // 2)
        gens.append([s * c for c in chi_vector(U)])
    return gens


def _check_genus(m):
    if m < 1:
        raise ValueError("m must be at least 1")
    if m > MAX_LATTICE_GENUS:
        raise BudgetError(f"lattice construction limited to m <= {MAX_LATTICE_GENUS}")


def barnes_wall(m, primed=False):
    """``L_m`` (or ``L'_m`` when ``primed``) as an integer lattice in HNF."""
    _check_genus(m)
    delta = 0 if primed else 1
    hnf = hermite_normal_form(_bw_generators(m, delta))
    if len(hnf) != 2**m:
        raise ArithmeticError("Barnes-Wall generators do not have full rank")
    name = f"L'_{m}" if primed else f"L_{m}"
    return LatticeBasis(name, "Z", hnf, _gram(hnf), hnf)


def _balanced_vectors(m):
    """The generators ``sqrt2^(m-d) chi_U`` as (a, b) pair rows."""
    rows = []
    for U in affine_subspaces(m):
        k = m - U.dim
        s = (2 ** (k // 2), 0) if k % 2 == 0 else (0, 2 ** (k // 2))
        rows.append([s if c else (0, 0) for c in chi_vector(U)])
    return rows


def _z_hnf_of_pairs(rows):
    """Integer HNF of the Z-module generated by the rows and their sqrt 2 multiples."""
    flat = []
    for r in rows:
        flat.append([c for x in r for c in x])
        flat.append([c for x in r for c in _mul((0, 1), x)])
    return hermite_normal_form(flat)


def _pairs_to_vector(row):
    return [SqrtTwo(a, b) if b else a for a, b in row]


def balanced_lattice(m):
    """``M_m = sqrt2 L'_m + L_m`` with a ``Z[sqrt 2]``-basis and its Gram matrix."""
    _check_genus(m)
    rows = _balanced_vectors(m)
    basis = _zs_echelon(rows, 2**m)
    hnf = _z_hnf_of_pairs(rows)
    if len(basis) != 2**m or _z_hnf_of_pairs(basis) != hnf:
        raise ArithmeticError("Z[sqrt2] echelon basis does not generate M_m")
    vecs = [_pairs_to_vector(r) for r in basis]
    return LatticeBasis(f"M_{m}", "Z[sqrt2]", vecs, _gram(vecs), hnf)


def e8_check(primed=False):
    """Rescale ``L_3`` (or ``L'_3``) by ``det^(1/8)``: even unimodular of rank 8?

    Returns ``(scale, is_even_unimodular, minimum, kissing_number)``.
    """
    L = barnes_wall(3, primed)
    det = int(L.det())
    scale = round(det ** (1 / 8))
    while scale**8 < det:
        scale += 1
    ok = scale**8 == det and all(int(x) % scale == 0 for row in L.gram for x in row)
    if ok:
        G = [[int(x) // scale for x in row] for row in L.gram]
        ok = all(G[i][i] % 2 == 0 for i in range(8)) and ExactMatrix(G).det() == 1
    mn, count = L.minimum()
    return scale, ok, mn, count


def rational_part(lattice):
    """``M intersect Q^n`` for a ``Z[sqrt 2]``-lattice, as an integer HNF."""
    n = lattice.dim
    # columns reordered: all sqrt2 parts first, then rational parts
    reordered = [[row[2 * i + 1] for i in range(n)] + [row[2 * i] for i in range(n)] for row in lattice.hnf]
    hnf = hermite_normal_form(reordered)
    return [row[n:] for row in hnf if not any(row[:n])]


def _kron_rows(A, B):
    return [[_mul(a, b) for a in ra for b in rb] for ra in A for rb in B]


def _basis_pairs(lattice):
    return [[_zs(x) for x in row] for row in lattice.basis]


def tensor_power_pairs(m):
    rows = _basis_pairs(balanced_lattice(1))
    out = rows
    for _ in range(m - 1):
        out = _kron_rows(out, rows)
    return out


def verify_rational_part(m):
    """The rational part of ``M_1^(x m)`` equals ``L_m``."""
    hnf = _z_hnf_of_pairs(tensor_power_pairs(m))
    n = 2**m
    reordered = [[row[2 * i + 1] for i in range(n)] + [row[2 * i] for i in range(n)] for row in hnf]
    rat = [row[n:] for row in hermite_normal_form(reordered) if not any(row[:n])]
    return hermite_normal_form(rat) == barnes_wall(m).hnf


def verify_tensor_decomposition(m, perturb=False):
    """HNF of ``M_m`` against HNF of the Kronecker basis of ``M_(m-1)`` and ``M_1``.

    ``perturb`` doubles one basis vector of the product first (a negative
    control that must make the check fail).
    """
    if m < 2 or m > MAX_LATTICE_GENUS:
        raise ValueError("tensor decomposition is checked for 2 <= m <= 4")
    left = _basis_pairs(balanced_lattice(m - 1))
    right = _basis_pairs(balanced_lattice(1))
    rows = _kron_rows(left, right)
    if perturb:
        rows[0] = [_mul((2, 0), x) for x in rows[0]]
    return _z_hnf_of_pairs(rows) == balanced_lattice(m).hnf


# ---------------------------------------------------------------------------
# automorphisms


def _apply(g, vec):
    """``g v`` for a column vector ``v``."""
    out = []
    for row in g.rows:
        s = 0
        for a, b in zip(row, vec):
            if a and b:
                s = s + a * b
        out.append(s)
    return out


def _is_orthogonal(g):
    prod = g.conj_transpose() @ g
    return prod.is_identity()


def stabilizes(g, lattice):
    """``g`` is orthogonal and maps every basis vector of ``lattice`` into it."""
    if not _is_orthogonal(g):
        return False
    return all(lattice.contains(_apply(g, v)) for v in lattice.basis)


def rotation_pi_8():
    """Rotation of the plane by ``pi/8``, with entries in ``Q(zeta_16)``."""
    f = cyclotomic_field(16)
    z = f.element(f.powers[1])
    zi = f.element(f.powers[15])
    half = Fraction(1, 2)
    c = (z + zi) * half
    s = (z - zi) * f.element(f.powers[12]) * half  # (z - z^-1)/(2i), i^-1 = zeta^12
    return ExactMatrix([[c, -s], [s, c]])


def _complex_lattice(m):
    """``Z[zeta_8] (x) M_m`` as an integer HNF in the power-basis coordinates of Q(zeta_8)."""
    M = balanced_lattice(m)
    f = cyclotomic_field(8)
    rows = []
    for v in M.basis:
        ev = [embed_sqrt2(x) for x in v]
        for k in range(4):
            zk = f.element(f.powers[k])
            rows.append(_cyclo_flat([x * zk for x in ev]))
    return hermite_normal_form(rows)


def _cyclo_flat(vec):
    out = []
    for x in vec:
        if x.den != 1:
            return None
        out.extend(int(c) for c in x.num)
    return out


def verify_automorphism_membership(m, variant="real", generators=None):
    """Every generator is unitary and stabilises ``M_m`` (or ``Z[zeta_8] (x) M_m``)."""
    if variant == "real":
        gens = generators if generators is not None else clifford_generators(GroupSpec(GroupKind.REAL, m))
        M = balanced_lattice(m)
        return all(stabilizes(g, M) for g in gens)
    if variant != "complex":
        raise ValueError("variant must be 'real' or 'complex'")
    gens = generators if generators is not None else clifford_generators(GroupSpec(GroupKind.COMPLEX, m))
    hnf = _complex_lattice(m)
    M = balanced_lattice(m)
    for g in gens:
        if not _is_orthogonal(g):
            return False
        for v in M.basis:
            image = _apply(g, [embed_sqrt2(x) for x in v])
            flat = _cyclo_flat([cyclotomic_field(8).coerce(x) for x in image])
            if flat is None or not in_row_lattice(hnf, flat):
                return False
    return True


def _to_basis_matrix(g, B, Binv):
    """Matrix of ``g`` acting on the lattice rows: ``B g^T B^-1``."""
    return B @ g.transpose() @ Binv


def verify_span_maximal_order(closure):
    """Z-span of the group, written in a ``Z[sqrt 2]``-basis of ``M_m``, is all of ``Z[sqrt 2]^(n x n)``."""
    m = int(round(math.log2(closure.dim)))
    if m < 2:
        raise NotClaimedError("the maximal-order property is claimed only for m >= 2")
    if closure.num is None:
        raise ValueError("closure must retain its elements")
    M = balanced_lattice(m)
    B = ExactMatrix(M.basis)
    Binv = B.inverse()
    n = closure.dim
    target = 2 * n * n
    hnf = []
    batch = []
    for g in closure:
        X = _to_basis_matrix(g, B, Binv)
        flat = _flatten([x for row in X.rows for x in row])
        if flat is None:
            return False  # not even an automorphism of M_m
        batch.append(flat)
        if len(batch) >= 64:
            hnf = hermite_normal_form(hnf + batch)
            batch = []
            if len(hnf) == target and hnf_determinant(hnf) == 1:
                return True
    hnf = hermite_normal_form(hnf + batch)
    return len(hnf) == target and hnf_determinant(hnf) == 1


# ---------------------------------------------------------------------------
# spherical designs


def orbit_points(closure, point):
    """``g x / |x|`` for every group element (float, with multiplicity)."""
    x = np.asarray(point, dtype=float)
    x = x / np.linalg.norm(x)
    pts = []
    step = 1 << 14
    for start in range(0, closure.order, step):
        mats = closure.to_complex(start, start + step)
        pts.append(np.einsum("bij,j->bi", mats, x))
    pts = np.concatenate(pts)
    if np.abs(pts.imag).max(initial=0) > 1e-9:
        raise ValueError("design tests need a real group")
    return pts.real


def _zonal(k, n, t):
    """Gegenbauer polynomial normalised to 1 at t = 1, for dimension ``n``."""
    from scipy.special import eval_chebyt, eval_gegenbauer

    if n == 2:
        return eval_chebyt(k, t)
    alpha = (n - 2) / 2
    return eval_gegenbauer(k, alpha, t) / eval_gegenbauer(k, alpha, 1.0)


@dataclass
class DesignReport:
    m: int
    size: int
    residuals: dict
    tolerance: float
    strength: int
    point: list

    def as_dict(self):
        return {
            "m": self.m,
            "orbit_size": self.size,
            "tolerance": self.tolerance,
            "strength": self.strength,
            "residuals": {str(k): float(v) for k, v in self.residuals.items()},
            "point": [float(x) for x in self.point],
        }


def design_test(closure, point, max_degree, tolerance=1e-9):
    """Largest ``t <= max_degree`` such that the orbit of ``point`` is a t-design.

    The residual at degree ``k`` is ``|X|^-2 sum_{x,y} Q_k(<x, y>)`` with the
    normalised zonal polynomial ``Q_k``; it vanishes iff every harmonic
    polynomial of degree ``k`` averages to zero on the orbit.
    """
    pts = orbit_points(closure, point)
    n = pts.shape[1]
    ip = np.clip(pts @ pts.T, -1.0, 1.0)
    residuals = {}
    strength = 0
    failed = False
    for k in range(1, max_degree + 1):
        res = abs(float(_zonal(k, n, ip).mean()))
        residuals[k] = res
        if not failed and res < tolerance:
            strength = k
        else:
            failed = True
    m = int(round(math.log2(n)))
    return DesignReport(m, pts.shape[0], residuals, tolerance, strength, list(point))


def harmonic_basis(nvars, degree):
    """Exact basis of harmonic forms of the given degree."""
    from .exact import Polynomial, monomials, nullspace
    from .exact.linalg import polys_to_rows

    monos = [Polynomial.monomial(e) for e in monomials(nvars, degree)]
    if degree < 2:
        return monos
    images = [p.laplacian() for p in monos]
    rows, index = polys_to_rows(images)
    system = [[rows[j][k] for j in range(len(monos))] for k in range(len(index))]
    out = []
    for v in nullspace(system, len(monos)):
        acc = Polynomial(nvars)
        for c, p in zip(v, monos):
            if c:
                acc = acc + p.scale(c)
        out.append(acc)
    return out


def harmonic_moments(closure, point, degree, exact=False):
    """Largest orbit average of a degree-``degree`` harmonic basis polynomial.

    ``exact=True`` evaluates at the exact orbit points (``point`` with exact
    entries; unnormalised), otherwise in floating point.
    """
    basis = harmonic_basis(closure.dim, degree)
    if exact:
        images = [_apply(g, list(point)) for g in closure]
        worst = 0.0
        vals = []
        for h in basis:
            s = 0
            for y in images:
                s = s + h.evaluate(y)
            avg = s * Fraction(1, closure.order)
            vals.append(avg)
            worst = max(worst, abs(complex(avg)))
        return worst, vals
    pts = closure.to_complex() @ np.asarray(point, dtype=float)
    vals = [complex(h.to_float_evaluator()(pts).mean()) for h in basis]
    return max((abs(v) for v in vals), default=0.0), vals


def find_design_point(m=2, degrees=(8, 12), seed=0, attempts=20):
    """A unit vector where the harmonic invariants of the given degrees vanish.

    Found by least squares from random starts; returns the point and the
    largest absolute residual.
    """
    from scipy.optimize import least_squares

    from .invariants import harmonic_invariants

    if m != 2:
        raise ValueError("the design-point search is implemented for m = 2")
    fs = []
    for d in degrees:
        for h in harmonic_invariants(m, d):
            fs.append(h.to_float_evaluator())
    if not fs:
        raise ArithmeticError("no harmonic invariants in the requested degrees")
    rng = np.random.default_rng(seed)

    def residual(x):
        y = x[None, :] / np.linalg.norm(x)
        return np.array([float(np.real(f(y)[0])) for f in fs])

    best = None
    for _ in range(attempts):
        x0 = rng.normal(size=2**m)
        sol = least_squares(residual, x0, xtol=1e-15, ftol=1e-15, gtol=1e-15, method="trf")
        x = sol.x / np.linalg.norm(sol.x)
        err = float(np.abs(residual(x)).max())
        if best is None or err < best[1]:
            best = (x, err)
        if err < 1e-13:
            break
    return best

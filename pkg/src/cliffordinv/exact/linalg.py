"""Exact linear algebra: row reduction over fields and Hermite normal form over Z."""

from __future__ import annotations

from fractions import Fraction

from .fields import FieldElement, simplify
from .poly import Polynomial

__all__ = [
    "rref",
    "rank",
    "nullspace",
    "hermite_normal_form",
    "hnf_determinant",
    "in_row_lattice",
    "polys_to_rows",
    "poly_rank",
    "express_in_span",
]


def _inv(x):
    if isinstance(x, FieldElement):
        return x.inverse()
    return Fraction(1) / x


def rref(rows, ncols=None):
    """Reduced row echelon form; returns ``(rows, pivot_columns)``.

    ``rows`` is a list of lists of exact scalars; zero rows are dropped.
    """
    a = [list(r) for r in rows]
    if ncols is None:
        ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(a)):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = _inv(a[r][c])
        a[r] = [simplify(x * inv) if x else x for x in a[r]]
        pr = a[r]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [simplify(x - f * y) if y else x for x, y in zip(a[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows, ncols=None):
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of ``{x : rows @ x == 0}`` as a list of coefficient lists."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            if row[f]:
                v[p] = -row[f]
        basis.append(v)
    return basis


def polys_to_rows(polys, index=None):
    """Coefficient rows of polynomials over a shared monomial index."""
    if index is None:
        keys = sorted({e for p in polys for e in p.terms}, reverse=True)
        index = {e: i for i, e in enumerate(keys)}
    width = len(index)
    rows = []
    for p in polys:
        row = [Fraction(0)] * width
        for e, c in p.terms.items():
            row[index[e]] = c
        rows.append(row)
    return rows, index


def poly_rank(polys):
    if not polys:
        return 0
    rows, index = polys_to_rows(polys)
    return rank(rows, len(index))


def express_in_span(target, basis):
    """Coefficients ``c`` with ``sum c_i basis_i == target``, or None."""
    rows, index = polys_to_rows(list(basis) + [target])
    # columns = basis elements + target; solve transpose system
    n = len(basis)
    width = len(index)
    system = [[rows[i][k] for i in range(n)] + [rows[n][k]] for k in range(width)]
    red, pivots = rref(system, n + 1)
    if n in pivots:
        return None
    sol = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        sol[p] = row[n]
    return sol


def combine(coeffs, polys):
    nvars = polys[0].nvars
    acc = Polynomial(nvars)
    for c, p in zip(coeffs, polys):
        if c:
            acc = acc + p.scale(c)
    return acc


# ---------------------------------------------------------------------------
# integer lattices

def hermite_normal_form(rows):
    """Row-style Hermite normal form of an integer matrix.

    Returns the nonzero rows: pivots strictly increase to the right, are
    positive, and entries above each pivot lie in ``[0, pivot)``.  The rows
    form a Z-basis of the row lattice.
    """
    a = [list(map(int, r)) for r in rows if any(r)]
    if not a:
        return []
    ncols = len(a[0])
    out = []
    r = 0
    for c in range(ncols):
        # gather rows with nonzero entry in column c below r
        while True:
            nz = [i for i in range(r, len(a)) if a[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(a[i][c]))
            a[r], a[piv] = a[piv], a[r]
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            done = True
            p = a[r][c]
            for i in range(r + 1, len(a)):
                if a[i][c]:
                    q = a[i][c] // p
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c]:
                        done = False
            if done:
                break
        if r < len(a) and a[r][c]:
            p = a[r][c]
            for i in range(r):
                q = a[i][c] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
            a = a[:r] + [row for row in a[r:] if any(row)]
            if r == len(a):
                break
    out = [row for row in a[:r]]
    return out


def hnf_determinant(hnf):
    """Product of pivots (the index in Z^n when the HNF has full rank n)."""
    d = 1
    for row in hnf:
        d *= next(x for x in row if x)
    return d


def in_row_lattice(hnf, vec):
    """Exact membership of an integer (or rational) vector in the HNF lattice."""
    v = [Fraction(x) for x in vec]
    for row in hnf:
        c = next(i for i, x in enumerate(row) if x)
        q = v[c] / row[c]
        if q.denominator != 1:
            return False
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    return not any(v)

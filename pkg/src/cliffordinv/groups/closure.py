"""Breadth-first group closure on packed integer encodings.

An element of a group over a number field ``K`` of degree ``deg`` is
stored as an integer array ``num`` of shape ``(d, d, deg)`` (coordinates of
each entry over the field basis) and one positive integer ``den``, reduced
so that the gcd of all entries and ``den`` is 1.  That pair is canonical,
so its bytes serve as the set key.

Right multiplication by a fixed generator ``g`` is linear in the
coordinates of the left factor, so a whole frontier is multiplied at once
by a single ``(B*d, d*deg) @ (d*deg, d*deg)`` matrix product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from ..errors import BudgetError
from ..exact import ExactMatrix, FieldElement, simplify
from .generators import GroupSpec, generators_for, predicted_order

__all__ = ["GroupClosure", "group_closure", "closure_for", "pack", "unpack", "PackedField"]

DEFAULT_MAX_ORDER = 10**6
_CHUNK = 1 << 15
_EXACT_LIMIT = 2.0**52


class PackedField:
    """Structure tensor of a number field in numpy form."""

    def __init__(self, field):
        self.field = field
        self.deg = field.degree
        self.table = np.array(field.table, dtype=np.int64)  # (a, b, c)
        self.basis = np.array(field.basis_values, dtype=complex)

    def coords(self, x):
        """Integer coordinates and denominator of a scalar."""
        if isinstance(x, FieldElement):
            if x.field is not self.field:
                raise ValueError(f"entry from {x.field.key}, expected {self.field.key}")
            return x.num, x.den
        x = self.field.coerce(x)
        return x.num, x.den


def pack(g, pf):
    """``(num, den)`` for an ExactMatrix ``g``."""
    d = g.dim
    entries = [[pf.coords(x) for x in row] for row in g.rows]
    den = 1
    for row in entries:
        for _, dd in row:
            den = math.lcm(den, dd)
    num = np.zeros((d, d, pf.deg), dtype=np.int64)
    for i, row in enumerate(entries):
        for j, (c, dd) in enumerate(row):
            num[i, j] = np.array(c, dtype=np.int64) * (den // dd)
    return _normalize(num[None], np.array([den], dtype=np.int64))


def unpack(num, den, pf):
    d = num.shape[0]
    f = pf.field
    return ExactMatrix(
        [[simplify(f.element(tuple(int(c) for c in num[i, j]), int(den))) for j in range(d)] for i in range(d)]
    )


def _normalize(num, den):
    B = num.shape[0]
    flat = num.reshape(B, -1)
    g = np.gcd.reduce(np.abs(flat), axis=1)
    g = np.gcd(g, den)
    g[g == 0] = 1
    return (flat // g[:, None]).reshape(num.shape), den // g


def _right_operator(gnum, pf):
    """Matrix ``M`` with ``vec(A g) = vec(A) @ M`` in packed coordinates."""
    d = gnum.shape[0]
    deg = pf.deg
    # M[(j,a),(k,c)] = sum_b g[j,k,b] T[a,b,c]
    M = np.einsum("jkb,abc->jakc", gnum, pf.table)
    return M.reshape(d * deg, d * deg)


def _multiply(num, den, M, gden):
    B, d, _, deg = num.shape
    A = num.reshape(B * d, d * deg)
    bound = float(np.abs(A).max(initial=0)) * float(np.abs(M).max(initial=0)) * A.shape[1]
    if bound < _EXACT_LIMIT:
        prod = np.rint(A.astype(np.float64) @ M.astype(np.float64)).astype(np.int64)
    else:
        prod = A @ M
    out = prod.reshape(B, d, d, deg)
    return _normalize(out, den * gden)


class _Keyer:
    """Byte keys of packed elements at a fixed integer width."""

    def __init__(self, dtype):
        self.dtype = np.dtype(dtype)
        info = np.iinfo(self.dtype)
        self.lo, self.hi = info.min, info.max

    def fits(self, num, den):
        return (
            num.size == 0
            or (num.min() >= self.lo and num.max() <= self.hi and den.max() <= self.hi)
        )

    def keys(self, num, den):
        B = num.shape[0]
        block = np.concatenate([den[:, None], num.reshape(B, -1)], axis=1).astype(self.dtype)
        block = np.ascontiguousarray(block)
        raw = block.view(np.dtype((np.void, block.shape[1] * block.itemsize))).ravel()
        return [r.tobytes() for r in raw]


class _WidthOverflow(Exception):
    pass


@dataclass
class GroupClosure:
    """A fully enumerated finite matrix group in packed form."""

    generators: list
    packed_field: PackedField
    num: np.ndarray | None
    den: np.ndarray | None
    order: int
    spec: GroupSpec | None = None
    keys: set = dc_field(default_factory=set, repr=False)
    _keyer: _Keyer | None = dc_field(default=None, repr=False)

    @property
    def dim(self):
        return self.generators[0].dim

    @property
    def field(self):
        return self.packed_field.field

    def __len__(self):
        return self.order

    def element(self, i):
        if self.num is None:
            raise ValueError("closure was computed without retaining elements")
        return unpack(self.num[i], self.den[i], self.packed_field)

    def __iter__(self):
        for i in range(self.order):
            yield self.element(i)

    def __contains__(self, g):
        num, den = pack(g, self.packed_field)
        if not self._keyer.fits(num, den):
            return False
        return self._keyer.keys(num, den)[0] in self.keys

    def to_complex(self, start=0, stop=None):
        """Float complex array ``(n, d, d)`` of elements ``start:stop``."""
        num = self.num[start:stop]
        den = self.den[start:stop]
        vals = num.astype(np.float64) @ self.packed_field.basis
        return vals / den[:, None, None]

    def is_real(self):
        return self.field.key == "QSqrt2"

    def sorted_indices(self):
        """Indices ordered by canonical key bytes (deterministic output order)."""
        ks = self._keyer.keys(self.num, self.den)
        return sorted(range(self.order), key=ks.__getitem__)


def group_closure(gens, max_order=DEFAULT_MAX_ORDER, spec=None, store=True, on_batch=None):
    """Enumerate the group generated by ``gens`` by BFS on right multiplication.

    ``on_batch(num, den)`` (optional) is called once per batch of new
    elements, including the identity; with ``store=False`` the elements are
    not retained, which is how the 5-million element case is streamed.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    field = None
    for g in gens:
        for row in g.rows:
            for x in row:
                if isinstance(x, FieldElement):
                    field = x.field
                    break
            if field:
                break
        if field:
            break
    if spec is not None:
        field = spec.field
    if field is None:
        from ..exact import QSQRT2

        field = QSQRT2
    pf = PackedField(field)
    for dtype in (np.int8, np.int16, np.int64):
        try:
            return _bfs(gens, pf, max_order, spec, store, on_batch, _Keyer(dtype))
        except _WidthOverflow:
            continue
    raise AssertionError("unreachable")


def _bfs(gens, pf, max_order, spec, store, on_batch, keyer):
    d = gens[0].dim
    ops = []
    for g in gens:
        if g.dim != d:
            raise ValueError("generators have different dimensions")
        gnum, gden = pack(g, pf)
        ops.append((_right_operator(gnum[0], pf), int(gden[0])))
    inum, iden = pack(ExactMatrix.identity(d), pf)
    if not keyer.fits(inum, iden):
        raise _WidthOverflow
    seen = set(keyer.keys(inum, iden))
    stored_num = [inum.astype(keyer.dtype)] if store else []
    stored_den = [iden] if store else []
    if on_batch:
        on_batch(inum, iden)
    frontier = [(inum, iden)]
    total = 1
    while frontier:
        nxt = []
        for fnum, fden in frontier:
            for start in range(0, fnum.shape[0], _CHUNK):
                cnum = fnum[start : start + _CHUNK]
                cden = fden[start : start + _CHUNK]
                for M, gden in ops:
                    pnum, pden = _multiply(cnum, cden, M, gden)
                    if not keyer.fits(pnum, pden):
                        raise _WidthOverflow
                    ks = keyer.keys(pnum, pden)
                    fresh = []
                    for i, k in enumerate(ks):
                        if k not in seen:
                            seen.add(k)
                            fresh.append(i)
                    if not fresh:
                        continue
                    total += len(fresh)
                    if total > max_order:
                        raise BudgetError(
                            f"group closure exceeded max_order={max_order} "
                            f"(at least {total} elements found)",
                            partial=total,
                        )
                    idx = np.array(fresh)
                    bnum, bden = pnum[idx], pden[idx]
                    if store:
                        stored_num.append(bnum.astype(keyer.dtype))
                        stored_den.append(bden)
                    if on_batch:
                        on_batch(bnum, bden)
                    nxt.append((bnum, bden))
        if nxt:
            frontier = [(np.concatenate([a for a, _ in nxt]), np.concatenate([b for _, b in nxt]))]
        else:
            frontier = []
    closure = GroupClosure(
        generators=gens,
        packed_field=pf,
        num=np.concatenate(stored_num).astype(np.int64) if store else None,
        den=np.concatenate(stored_den) if store else None,
        order=total,
        spec=spec,
        keys=seen if store else set(),
        _keyer=keyer,
    )
    if spec is not None:
        try:
            expected = predicted_order(spec)
        except Exception:
            expected = None
        if expected is not None and expected != total:
            raise AssertionError(
                f"closure order {total} differs from the predicted order {expected} for {spec}"
            )
    return closure


_CACHE = {}


def closure_for(spec, max_order=DEFAULT_MAX_ORDER):
    """Closure of the standard generators of ``spec`` (memoised per process)."""
    if not isinstance(spec, GroupSpec):
        spec = GroupSpec(*spec)
    if spec not in _CACHE:
        _CACHE[spec] = group_closure(generators_for(spec), max_order=max_order, spec=spec)
    return _CACHE[spec]

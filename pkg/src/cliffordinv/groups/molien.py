"""Exact Molien series ``(1/|G|) sum_g 1/det(I - lambda g)``.

Elements are bucketed by characteristic polynomial, found numerically in
batches; each bucket then contributes one exact series computed from a
representative's exact characteristic polynomial.  The bucketing only
decides which elements share a term, and the final coefficients are
required to be integers, so a misgrouping could not pass silently.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..exact import TruncatedSeries, simplify
from .closure import GroupClosure, PackedField, group_closure, unpack
from .generators import GroupSpec, generators_for

__all__ = ["molien_series", "MolienAccumulator", "molien_series_streaming", "charpoly_classes"]

_SCALE = 1e6


def _float_charpolys(mats):
    """Coefficients of ``det(lambda I - g)`` (highest first) for a batch."""
    eig = np.linalg.eigvals(mats)
    n, d = eig.shape
    coeffs = np.zeros((n, d + 1), dtype=complex)
    coeffs[:, 0] = 1
    for k in range(d):
        lam = eig[:, k][:, None]
        shifted = np.zeros_like(coeffs)
        shifted[:, 1:] = coeffs[:, :-1] * lam
        coeffs = coeffs - shifted
    return coeffs


def _class_keys(mats):
    c = _float_charpolys(mats)
    return np.concatenate(
        [np.rint(c.real * _SCALE), np.rint(c.imag * _SCALE)], axis=1
    ).astype(np.int64)


class MolienAccumulator:
    """Counts group elements per characteristic polynomial, one batch at a time."""

    def __init__(self, packed_field: PackedField):
        self.pf = packed_field
        self.counts = {}
        self.reps = {}
        self.total = 0

    def add(self, num, den):
        if num.shape[0] == 0:
            return
        vals = num.astype(np.float64) @ self.pf.basis / den[:, None, None]
        keys = _class_keys(vals)
        uniq, first, counts = np.unique(keys, axis=0, return_index=True, return_counts=True)
        for row, i, c in zip(uniq, first, counts):
            k = row.tobytes()
            if k not in self.counts:
                self.counts[k] = 0
                self.reps[k] = (num[i].copy(), int(den[i]))
            self.counts[k] += int(c)
        self.total += num.shape[0]

    def classes(self):
        """``[(count, representative ExactMatrix)]`` in a deterministic order."""
        return [
            (self.counts[k], unpack(*self.reps[k], self.pf)) for k in sorted(self.counts)
        ]

    def series(self, order):
        return _series_from_classes(self.classes(), self.total, order)


def _series_from_classes(classes, group_order, order):
    if order < 0:
        raise ValueError("truncation order must be non-negative")
    acc = None
    for count, g in classes:
        c = g.char_poly()  # det(lambda I - g), constant first
        d = g.dim
        det_coeffs = [c[d - j] for j in range(d + 1)]  # det(I - lambda g)
        term = TruncatedSeries(det_coeffs, order).inverse() * count
        acc = term if acc is None else acc + term
    coeffs = []
    for k, v in enumerate(acc.coeffs):
        v = simplify(v) / group_order if not hasattr(v, "field") else simplify(v * Fraction(1, group_order))
        v = simplify(v)
        if not isinstance(v, Fraction) or v.denominator != 1 or v < 0:
            raise ArithmeticError(f"Molien coefficient at degree {k} is {v}, not a natural number")
        coeffs.append(int(v))
    return coeffs


def charpoly_classes(closure: GroupClosure):
    acc = MolienAccumulator(closure.packed_field)
    step = 1 << 14
    for start in range(0, closure.order, step):
        acc.add(closure.num[start : start + step], closure.den[start : start + step])
    return acc


def molien_series(closure: GroupClosure, order: int):
    """Integer coefficients of the Molien series up to ``lambda**order``."""
    if order < 0:
        raise ValueError("truncation order must be non-negative")
    acc = charpoly_classes(closure)
    return acc.series(order)


def molien_series_streaming(spec: GroupSpec, order: int, max_order: int = 6 * 10**6):
    """Molien series without retaining the group: bucket elements as the BFS finds them."""
    if order < 0:
        raise ValueError("truncation order must be non-negative")
    gens = generators_for(spec)
    acc = MolienAccumulator(PackedField(spec.field))
    closure = group_closure(gens, max_order=max_order, spec=spec, store=False, on_batch=acc.add)
    assert acc.total == closure.order
    return acc.series(order), closure.order

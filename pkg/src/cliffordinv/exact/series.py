"""Truncated univariate power series with exact coefficients."""

from __future__ import annotations

from fractions import Fraction

from .fields import FieldElement, simplify

__all__ = ["TruncatedSeries"]


def _inv(x):
    if isinstance(x, FieldElement):
        return x.inverse()
    return Fraction(1) / x


class TruncatedSeries:
    """``sum_k coeffs[k] * t**k`` modulo ``t**(order+1)``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        coeffs = coeffs[: order + 1] + [Fraction(0)] * (order + 1 - len(coeffs))
        self.coeffs = [simplify(Fraction(c) if isinstance(c, int) else c) for c in coeffs]
        self.order = order

    @classmethod
    def from_polynomial(cls, coeffs, order):
        return cls(coeffs, order)

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def _combine(self, other):
        if isinstance(other, TruncatedSeries):
            return other, min(self.order, other.order)
        return TruncatedSeries([other], self.order), self.order

    def __add__(self, other):
        other, n = self._combine(other)
        return TruncatedSeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = []
        a, b = self.coeffs, other.coeffs
        for k in range(n + 1):
            s = 0
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    s = s + a[i] * b[k - i]
            out.append(s)
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def inverse(self):
        c0 = self.coeffs[0]
        if not c0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = _inv(c0)
        out = [inv0]
        a = self.coeffs
        for k in range(1, self.order + 1):
            s = 0
            for i in range(1, k + 1):
                if a[i] and out[k - i]:
                    s = s + a[i] * out[k - i]
            out.append(-s * inv0)
        return TruncatedSeries(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return self * _inv(other)


def series_inverse(s):
    return s.inverse()

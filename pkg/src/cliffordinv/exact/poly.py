"""Sparse multivariate polynomials keyed by exponent tuples.

Coefficients are exact scalars (int, Fraction or a field element).  Rational
field elements are collapsed to Fraction on the way in so that equality and
hashing do not depend on which field a computation passed through.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .fields import FieldElement, canonical_hash, conj, simplify

__all__ = ["Polynomial", "monomials"]


def monomials(nvars, degree):
    """All exponent tuples of total ``degree`` in ``nvars`` variables, lex-descending."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - first):
            yield (first,) + rest


def _norm(c):
    c = simplify(c)
    if isinstance(c, int):
        return Fraction(c)
    return c


class Polynomial:
    __slots__ = ("nvars", "terms", "_key")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                if c:
                    e = tuple(e)
                    if len(e) != nvars:
                        raise ValueError("exponent length does not match nvars")
                    if e in clean:
                        s = clean[e] + c
                        if s:
                            clean[e] = s
                        else:
                            del clean[e]
                    else:
                        clean[e] = c
        self.terms = {e: _norm(c) for e, c in clean.items()}
        self._key = None

    @classmethod
    def _raw(cls, nvars, terms):
        # terms already clean and normalised
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj._key = None
        return obj

    @classmethod
    def variable(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps, c=1):
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def linear(cls, coeffs):
        n = len(coeffs)
        return cls(n, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)})

    # -- protocol -------------------------------------------------------------------------
    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        return self.terms.items()

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def key(self):
        """Hashable canonical form."""
        if self._key is None:
            self._key = (self.nvars, frozenset(self.terms.items()))
        return self._key

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and not other:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self.to_text()!r})"

    # -- arithmetic -------------------------------------------------------------------------
    def _check(self, other):
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = _norm(out[e] + c)
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        return self + (-other)

    def scale(self, c):
        if not c:
            return Polynomial._raw(self.nvars, {})
        return Polynomial._raw(
            self.nvars, {e: _norm(v * c) for e, v in self.terms.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                if e in out:
                    out[e] = out[e] + v
                else:
                    out[e] = v
        return Polynomial(self.nvars, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        return self.scale(Fraction(1) / c if not isinstance(c, FieldElement) else c.inverse())

    def __pow__(self, k):
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- structure --------------------------------------------------------------------------
    def degrees(self):
        return {sum(e) for e in self.terms}

    def degree(self):
        return max(self.degrees(), default=-1)

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def is_rational(self):
        return all(not isinstance(c, FieldElement) for c in self.terms.values())

    def conj(self):
        return Polynomial._raw(self.nvars, {e: conj(c) for e, c in self.terms.items()})

    def coefficient_sum(self):
        return sum(self.terms.values(), Fraction(0))

    def derivative(self, i):
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                e2 = e[:i] + (k - 1,) + e[i + 1 :]
                out[e2] = c * k
        return Polynomial(self.nvars, out)

    def laplacian(self):
        out = {}
        for e, c in self.terms.items():
            for i, k in enumerate(e):
                if k >= 2:
                    e2 = e[:i] + (k - 2,) + e[i + 1 :]
                    v = c * (k * (k - 1))
                    out[e2] = out[e2] + v if e2 in out else v
        return Polynomial(self.nvars, out)

    def evaluate(self, point):
        acc = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * x**k
            acc = acc + t
        return acc

    def rename(self, mapping, nvars=None):
        """Substitute ``x_i -> x_{mapping[i]}``; several variables may merge."""
        nvars = self.nvars if nvars is None else nvars
        out = {}
        for e, c in self.terms.items():
            ne = [0] * nvars
            for i, k in enumerate(e):
                if k:
                    ne[mapping[i]] += k
            ne = tuple(ne)
            out[ne] = out[ne] + c if ne in out else c
        return Polynomial(nvars, out)

    def substitute(self, forms):
        """Replace ``x_i`` by the Polynomial ``forms[i]``."""
        nvars = forms[0].nvars
        cache = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = forms[i] if k == 1 else power(i, k - 1) * forms[i]
            return cache[key]

        prefix = {(): Polynomial.constant(nvars, 1)}

        def prod(e):
            # memoise products over exponent prefixes
            if e in prefix:
                return prefix[e]
            head = prod(e[:-1])
            k = e[-1]
            res = head if k == 0 else head * power(len(e) - 1, k)
            prefix[e] = res
            return res

        out = {}
        for e, c in self.terms.items():
            for e2, c2 in prod(e).terms.items():
                v = c * c2
                out[e2] = out[e2] + v if e2 in out else v
        return Polynomial(nvars, out)

    def act(self, g):
        """Image under the matrix ``g``: ``x_i -> sum_j g[j][i] x_j``.

        This is the natural left action on polynomials when variables are
        identified with the standard basis vectors.
        """
        n = self.nvars
        if g.dim != n:
            raise ValueError(f"matrix of dimension {g.dim} acting on {n} variables")
        rows = g.rows
        cols = [[(j, rows[j][i]) for j in range(n) if rows[j][i]] for i in range(n)]
        if all(len(c) == 1 for c in cols):
            # monomial matrix: permute exponents, collect scalar factors
            target = [c[0][0] for c in cols]
            scal = [c[0][1] for c in cols]
            out = {}
            for e, c in self.terms.items():
                ne = [0] * n
                v = c
                for i, k in enumerate(e):
                    if k:
                        ne[target[i]] += k
                        s = scal[i]
                        if s != 1:
                            v = v * s**k
                out[tuple(ne)] = v
            return Polynomial(n, out)
        forms = [Polynomial(n, {tuple(int(t == j) for t in range(n)): a for j, a in c}) for c in cols]
        return self.substitute(forms)

    # -- output -------------------------------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: tuple(-x for x in t[0]))

    def to_text(self, names=None):
        if not self.terms:
            return "0"
        if names is None:
            names = [f"x{i}" for i in range(self.nvars)]
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                if isinstance(c, FieldElement) and not c.is_rational():
                    cs = f"({cs})"
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def canonical_hash(self):
        return b";".join(
            bytes(str(list(e)), "ascii") + b":" + canonical_hash(c) for e, c in self.sorted_terms()
        )

    def to_float_evaluator(self):
        """Return ``f(points)`` evaluating at an (M, nvars) float array."""
        import numpy as np

        exps = np.array([e for e in self.terms], dtype=np.int64).reshape(-1, self.nvars)
        coeffs = np.array([complex(c) for c in self.terms.values()])
        if np.all(coeffs.imag == 0):
            coeffs = coeffs.real

        def f(points):
            pts = np.atleast_2d(np.asarray(points))
            mono = np.prod(pts[:, None, :] ** exps[None, :, :], axis=2)
            return mono @ coeffs

        return f


def dimension_of_forms(nvars, degree):
    """Number of monomials of the given degree."""
    return comb(nvars + degree - 1, degree)

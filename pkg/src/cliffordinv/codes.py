"""Linear codes over F_2 and F_p: duality, equivalence, self-dual enumeration.

Binary words are Python ints with bit ``j`` holding coordinate ``j``, so the
string ``"1100"`` is the int ``0b0011``.  Prime-field words are tuples of
residues.  Both code classes store the reduced row echelon basis, which is
unique, so equality of codes is equality of bases.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

import numpy as np

from .errors import BudgetError, NotSelfDualError, UnknownCodeError

__all__ = [
    "BinaryCode",
    "PrimeFieldCode",
    "CodeClass",
    "canonical_form",
    "enumerate_self_dual",
    "enumerate_self_orthogonal",
    "supercodes_index2",
    "self_dual_supercodes",
    "shadow",
    "shadow_vectors",
    "hamming_code_8",
    "repetition_pairs",
    "tetracode",
    "ternary_golay_12",
    "named_code",
    "REGISTRY_NAMES",
    "ENUMERATION_BUDGET",
]

# largest length handled by enumerate_self_dual for each p
ENUMERATION_BUDGET = {2: 10, 3: 8, 5: 6}
CANONICAL_BUDGET = 12


def _weight(x):
    return x.bit_count()


# ---------------------------------------------------------------------------
# binary codes


def _rref2(rows, length):
    """Reduced echelon basis over F_2, pivots at the lowest set bit, sorted by pivot."""
    basis = []  # list of (pivot, row)
    for r in rows:
        for p, b in basis:
            if (r >> p) & 1:
                r ^= b
        if r:
            p = (r & -r).bit_length() - 1
            basis = [(q, b ^ r if (b >> p) & 1 else b) for q, b in basis]
            basis.append((p, r))
    basis.sort()
    return tuple(b for _, b in basis)


def _parse_word(w, length=None):
    if isinstance(w, int):
        return w
    if isinstance(w, str):
        s = w.strip().replace(" ", "")
        return sum(1 << j for j, ch in enumerate(s) if ch == "1")
    return sum(1 << j for j, b in enumerate(w) if int(b) % 2)


class BinaryCode:
    __slots__ = ("length", "basis", "_words", "_hash")

    def __init__(self, length: int, rows: Iterable = ()):
        if length < 0 or length > 64:
            raise ValueError("binary codes are limited to length <= 64")
        self.length = length
        rows = [_parse_word(r) for r in rows]
        if any(r >> length for r in rows):
            raise ValueError("generator row longer than the code length")
        self.basis = _rref2(rows, length)
        self._words = None
        self._hash = None

    @classmethod
    def from_strings(cls, rows):
        rows = [r.strip() for r in rows if r.strip()]
        if not rows:
            raise ValueError("no generator rows")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise ValueError("generator rows have different lengths")
        if any(set(r) - {"0", "1"} for r in rows):
            raise ValueError("binary rows must contain only 0 and 1")
        return cls(n, rows)

    @classmethod
    def zero(cls, length):
        return cls(length, [])

    @classmethod
    def full(cls, length):
        return cls(length, [1 << j for j in range(length)])

    @classmethod
    def all_ones(cls, length):
        return cls(length, [(1 << length) - 1])

    # -- basic data -------------------------------------------------------------------
    @property
    def dim(self):
        return len(self.basis)

    @property
    def p(self):
        return 2

    def __len__(self):
        return 1 << self.dim

    @property
    def ones(self):
        return (1 << self.length) - 1

    def __eq__(self, other):
        return isinstance(other, BinaryCode) and self.length == other.length and self.basis == other.basis

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.length, self.basis))
        return self._hash

    def __repr__(self):
        return f"BinaryCode({self.length}, {self.to_strings()})"

    def word_to_string(self, w):
        return "".join("1" if (w >> j) & 1 else "0" for j in range(self.length))

    def to_strings(self):
        return [self.word_to_string(b) for b in self.basis]

    def generator_matrix(self):
        """``dim x length`` 0/1 numpy array."""
        return np.array(
            [[(b >> j) & 1 for j in range(self.length)] for b in self.basis], dtype=np.int64
        ).reshape(self.dim, self.length)

    def codewords(self):
        """All codewords as ints, in Gray-code order starting from 0."""
        if self._words is None:
            words = [0]
            for b in self.basis:
                words = words + [w ^ b for w in words]
            self._words = tuple(words)
        return self._words

    def __contains__(self, w):
        w = _parse_word(w)
        for b in self.basis:
            p = (b & -b).bit_length() - 1
            if (w >> p) & 1:
                w ^= b
        return w == 0

    def reduce(self, w):
        """Canonical coset representative of ``w`` modulo the code."""
        for b in self.basis:
            p = (b & -b).bit_length() - 1
            if (w >> p) & 1:
                w ^= b
        return w

    def contains_code(self, other):
        return all(b in self for b in other.basis)

    def weight_distribution(self):
        dist = [0] * (self.length + 1)
        for w in self.codewords():
            dist[_weight(w)] += 1
        return tuple(dist)

    # -- derived codes ---------------------------------------------------------------------
    def dual(self):
        n = self.length
        pivots = [(b & -b).bit_length() - 1 for b in self.basis]
        pivset = set(pivots)
        out = []
        for f in range(n):
            if f in pivset:
                continue
            v = 1 << f
            for p, b in zip(pivots, self.basis):
                if (b >> f) & 1:
                    v |= 1 << p
            out.append(v)
        return BinaryCode(n, out)

    def extend(self, *words):
        return BinaryCode(self.length, list(self.basis) + [_parse_word(w) for w in words])

    def permute(self, perm):
        """Image under the coordinate map ``j -> perm[j]``."""
        out = []
        for b in self.basis:
            v = 0
            for j in range(self.length):
                if (b >> j) & 1:
                    v |= 1 << perm[j]
            out.append(v)
        return BinaryCode(self.length, out)

    def direct_sum(self, other):
        shift = self.length
        return BinaryCode(
            self.length + other.length, list(self.basis) + [b << shift for b in other.basis]
        )

    # -- predicates --------------------------------------------------------------------------
    def is_self_orthogonal(self):
        bs = self.basis
        return all(
            _weight(a & b) % 2 == 0 for i, a in enumerate(bs) for b in bs[i:]
        )

    def is_self_dual(self):
        return 2 * self.dim == self.length and self.is_self_orthogonal()

    def is_doubly_even(self):
        bs = self.basis
        if any(_weight(b) % 4 for b in bs):
            return False
        return all(_weight(a & b) % 2 == 0 for i, a in enumerate(bs) for b in bs[i + 1 :])

    def contains_ones(self):
        return self.ones in self

    def inner(self, a, b):
        return _weight(a & b) % 2


# ---------------------------------------------------------------------------
# codes over F_p


def _rrefp(rows, length, p):
    a = [list(r) for r in rows]
    out = []
    r = 0
    for c in range(length):
        piv = next((i for i in range(r, len(a)) if a[i][c] % p), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] % p:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
    for row in a[:r]:
        out.append(tuple(x % p for x in row))
    return tuple(out)


class PrimeFieldCode:
    __slots__ = ("p", "length", "basis", "_words", "_hash")

    def __init__(self, p: int, length: int, rows: Iterable = ()):
        if p < 2:
            raise ValueError("p must be prime")
        self.p = p
        self.length = length
        rows = [tuple(int(x) % p for x in r) for r in rows]
        if any(len(r) != length for r in rows):
            raise ValueError("generator row length mismatch")
        self.basis = _rrefp(rows, length, p)
        self._words = None
        self._hash = None

    @classmethod
    def from_strings(cls, p, rows):
        rows = [r.strip() for r in rows if r.strip()]
        n = len(rows[0])
        return cls(p, n, [[int(ch) for ch in r] for r in rows])

    @classmethod
    def all_ones(cls, p, length):
        return cls(p, length, [(1,) * length])

    @classmethod
    def zero(cls, p, length):
        return cls(p, length, [])

    @property
    def dim(self):
        return len(self.basis)

    @property
    def ones(self):
        return (1,) * self.length

    def __len__(self):
        return self.p**self.dim

    def __eq__(self, other):
        return (
            isinstance(other, PrimeFieldCode)
            and (self.p, self.length, self.basis) == (other.p, other.length, other.basis)
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.p, self.length, self.basis))
        return self._hash

    def __repr__(self):
        return f"PrimeFieldCode({self.p}, {self.length}, {self.to_strings()})"

    def word_to_string(self, w):
        return "".join(str(x) for x in w)

    def to_strings(self):
        return [self.word_to_string(b) for b in self.basis]

    def generator_matrix(self):
        return np.array(self.basis, dtype=np.int64).reshape(self.dim, self.length)

    def codewords(self):
        if self._words is None:
            p, n = self.p, self.length
            G = self.generator_matrix()
            coeffs = np.array(list(itertools.product(range(p), repeat=self.dim)), dtype=np.int64)
            coeffs = coeffs.reshape(-1, self.dim)
            words = (coeffs @ G) % p if self.dim else np.zeros((1, n), dtype=np.int64)
            self._words = tuple(tuple(int(x) for x in w) for w in words)
        return self._words

    def reduce(self, w):
        w = [x % self.p for x in w]
        for b in self.basis:
            c = next(i for i, x in enumerate(b) if x)
            f = w[c]
            if f:
                w = [(x - f * y) % self.p for x, y in zip(w, b)]
        return tuple(w)

    def __contains__(self, w):
        return not any(self.reduce(w))

    def contains_code(self, other):
        return all(b in self for b in other.basis)

    def inner(self, a, b):
        return sum(x * y for x, y in zip(a, b)) % self.p

    def dual(self):
        p, n = self.p, self.length
        pivots = [next(i for i, x in enumerate(b) if x) for b in self.basis]
        pivset = set(pivots)
        out = []
        for f in range(n):
            if f in pivset:
                continue
            v = [0] * n
            v[f] = 1
            for c, b in zip(pivots, self.basis):
                v[c] = (-b[f]) % p
            out.append(v)
        return PrimeFieldCode(p, n, out)

    def extend(self, *words):
        return PrimeFieldCode(self.p, self.length, list(self.basis) + [tuple(w) for w in words])

    def permute(self, perm, signs=None):
        signs = signs or [1] * self.length
        out = []
        for b in self.basis:
            v = [0] * self.length
            for j, x in enumerate(b):
                v[perm[j]] = (x * signs[j]) % self.p
            out.append(v)
        return PrimeFieldCode(self.p, self.length, out)

    def weight_distribution(self):
        dist = [0] * (self.length + 1)
        for w in self.codewords():
            dist[sum(1 for x in w if x)] += 1
        return tuple(dist)

    def is_self_orthogonal(self):
        bs = self.basis
        return all(self.inner(a, b) == 0 for i, a in enumerate(bs) for b in bs[i:])

    def is_self_dual(self):
        return 2 * self.dim == self.length and self.is_self_orthogonal()

    def contains_ones(self):
        return self.ones in self


# ---------------------------------------------------------------------------
# named codes


def hamming_code_8():
    """The [8,4,4] extended Hamming code with the generator matrix used for h_m."""
    return BinaryCode.from_strings(["00001111", "00110011", "01010101", "11111111"])


def repetition_pairs(k):
    """``i_2^k``: the direct sum of ``k`` copies of ``<11>``."""
    return BinaryCode(2 * k, [0b11 << (2 * i) for i in range(k)])


def tetracode():
    return PrimeFieldCode(3, 4, [(1, 0, 1, 1), (0, 1, 1, 2)])


_PALEY_6 = (
    (0, 1, 1, 1, 1, 1),
    (1, 0, 1, 2, 2, 1),
    (1, 1, 0, 1, 2, 2),
    (1, 2, 1, 0, 1, 2),
    (1, 2, 2, 1, 0, 1),
    (1, 1, 2, 2, 1, 0),
)


def ternary_golay_12():
    """The [12,6,6] ternary Golay code, columns rescaled so that it contains 1."""
    rows = [tuple(int(i == j) for j in range(6)) + _PALEY_6[i] for i in range(6)]
    code = PrimeFieldCode(3, 12, rows)
    full = next(c for c in code.codewords() if all(c))
    # multiplying coordinates by +-1 preserves self-duality
    return PrimeFieldCode(3, 12, [tuple((x * s) % 3 for x, s in zip(r, full)) for r in rows])


# ---------------------------------------------------------------------------
# equivalence


@dataclass(frozen=True)
class CodeClass:
    """An equivalence class of codes, named by a canonical key."""

    representative: object
    key: tuple
    weight_distribution: tuple
    members: int = field(default=1, compare=False)

    @property
    def dim(self):
        return self.representative.dim

    @property
    def length(self):
        return self.representative.length


def _inverse_mod(M, p):
    """Inverse of a square matrix over F_p (lists), or None if singular."""
    k = len(M)
    a = [list(r) + [int(i == j) for j in range(k)] for i, r in enumerate(M)]
    for c in range(k):
        piv = next((r for r in range(c, k) if a[r][c] % p), None)
        if piv is None:
            return None
        a[c], a[piv] = a[piv], a[c]
        inv = pow(a[c][c], -1, p)
        a[c] = [(x * inv) % p for x in a[c]]
        for r in range(k):
            if r != c and a[r][c] % p:
                f = a[r][c]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[c])]
    return [r[k:] for r in a]


def _columns(code):
    if isinstance(code, BinaryCode):
        return [tuple((b >> j) & 1 for b in code.basis) for j in range(code.length)]
    return [tuple(b[j] for b in code.basis) for j in range(code.length)]


def _sign_normal(col, p):
    # representative of {col, -col}: first nonzero entry <= (p-1)/2
    for x in col:
        if x:
            return col if x <= (p - 1) // 2 else tuple((-y) % p for y in col)
    return col


def _column_invariants(code):
    """Per coordinate: weight distribution of the codewords that are nonzero there.

    Coordinate permutations (with signs) of the code permute these values.
    """
    n = code.length
    if isinstance(code, BinaryCode):
        words = code.codewords()
        W = np.array([[(w >> j) & 1 for j in range(n)] for w in words], dtype=np.int64)
    else:
        W = np.array(code.codewords(), dtype=np.int64)
    W = W.reshape(-1, n) != 0
    wts = W.sum(axis=1)
    out = []
    for j in range(n):
        out.append(tuple(np.bincount(wts[W[:, j]], minlength=n + 1).tolist()))
    return out


def _rank_mod(vectors, p):
    return len(_rrefp([list(v) for v in vectors], len(vectors[0]), p)) if vectors else 0


def _information_sets(cols, invs, k, p):
    """Ordered information sets whose invariant sequence is lexicographically minimal."""
    # one column per (value up to sign); keep its invariant
    reps = {}
    for c, iv in zip(cols, invs):
        if not any(c):
            continue
        key = _sign_normal(c, p) if p > 2 else c
        reps.setdefault(key, iv)
    items = sorted(reps.items(), key=lambda t: (t[1], t[0]))
    results = []
    best_seq = [None]

    def extend(chosen, seq):
        if len(chosen) == k:
            if best_seq[0] is None or seq < best_seq[0]:
                best_seq[0] = seq
                results.clear()
            if seq == best_seq[0]:
                results.append(tuple(chosen))
            return
        if best_seq[0] is not None and seq > best_seq[0][: len(seq)]:
            return
        rank = len(chosen)
        indep = [
            (c, iv) for c, iv in items
            if c not in chosen and _rank_mod(chosen + [c], p) == rank + 1
        ]
        if not indep:
            return
        low = min(iv for _, iv in indep)
        for c, iv in indep:
            if iv == low:
                extend(chosen + [c], seq + (iv,))

    extend([], ())
    return results


def canonical_form(code, budget=CANONICAL_BUDGET):
    """Canonical key and class for ``code`` up to coordinate permutation.

    Binary codes: permutations.  Odd p: permutations with signs.

    For every ordered information set ``T`` the systematic generator matrix
    ``G_T^{-1} G`` is determined by ``T``; the sorted multiset of its columns
    determines the code up to equivalence.  Taking the minimum over all
    ``T`` whose sequence of column invariants is lexicographically smallest
    gives a key that is constant on equivalence classes and separates them.
    """
    n = code.length
    if n > budget:
        raise BudgetError(f"canonical form limited to length <= {budget}, got {n}")
    p = 2 if isinstance(code, BinaryCode) else code.p
    k = code.dim
    cols = _columns(code)
    wd = code.weight_distribution()
    if k == 0:
        return CodeClass(code, (p, n, 0, ()), wd)
    invs = _column_invariants(code)
    best = None
    sign_patterns = list(itertools.product((1, p - 1), repeat=k)) if p > 2 else [None]
    for T in _information_sets(cols, invs, k, p):
        GT = [[T[j][i] for j in range(k)] for i in range(k)]
        inv = _inverse_mod(GT, p)
        images = [tuple(sum(inv[i][t] * c[t] for t in range(k)) % p for i in range(k)) for c in cols]
        if p == 2:
            cand = tuple(sorted(zip(invs, images)))
            if best is None or cand < best:
                best = cand
        else:
            for signs in sign_patterns:
                cand = tuple(
                    sorted(
                        (iv, _sign_normal(tuple((s * x) % p for s, x in zip(signs, img)), p))
                        for iv, img in zip(invs, images)
                    )
                )
                if best is None or cand < best:
                    best = cand
    return CodeClass(code, (p, n, k, best), wd)


def _class_dedupe(codes):
    """Distinct equivalence classes among ``codes`` (bucket by weight distribution first)."""
    buckets = {}
    for c in codes:
        inv = tuple(sorted(_column_invariants(c))) if c.dim else ()
        buckets.setdefault((c.dim, c.weight_distribution(), inv), []).append(c)
    classes = []
    for _, group in sorted(buckets.items(), key=lambda t: t[0]):
        unique = list(dict.fromkeys(group))
        if len(unique) == 1:
            cc = canonical_form(unique[0])
            classes.append(CodeClass(cc.representative, cc.key, cc.weight_distribution, 1))
            continue
        found = {}
        for c in unique:
            cc = canonical_form(c)
            if cc.key in found:
                old = found[cc.key]
                found[cc.key] = CodeClass(old.representative, old.key, old.weight_distribution, old.members + 1)
            else:
                found[cc.key] = cc
        classes.extend(found[k] for k in sorted(found))
    return classes


# ---------------------------------------------------------------------------
# extensions


def _isotropic(code, w):
    if isinstance(code, BinaryCode):
        return _weight(w) % 2 == 0
    return code.inner(w, w) == 0


def _doubly_even_word(w):
    return _weight(w) % 4 == 0


def _coset_lines(code):
    """One representative per isotropic line of ``code^perp / code``."""
    dual = code.dual()
    seen = set()
    if isinstance(code, BinaryCode):
        for w in dual.codewords():
            r = code.reduce(w)
            if r and r not in seen and _isotropic(code, r):
                seen.add(r)
                yield r
        return
    p = code.p
    for w in dual.codewords():
        r = code.reduce(w)
        if not any(r) or not _isotropic(code, r):
            continue
        # normalise the line: first nonzero coordinate equal to 1
        lead = next(x for x in r if x)
        inv = pow(lead, -1, p)
        r = tuple((x * inv) % p for x in r)
        r = code.reduce(r)
        if r not in seen:
            seen.add(r)
            yield r


def supercodes_index2(code, doubly_even=False):
    """All self-orthogonal codes containing ``code`` with index ``p`` (2 for binary codes)."""
    if not code.is_self_orthogonal():
        raise ValueError("supercodes are defined for self-orthogonal codes")
    out = []
    for r in _coset_lines(code):
        if doubly_even and isinstance(code, BinaryCode) and not _doubly_even_word(r):
            # r + c is doubly even for some c in C only if r is (C doubly even)
            continue
        out.append(code.extend(r))
    return out


def self_dual_supercodes(code, doubly_even=False):
    """Every self-dual code ``C'`` with ``code <= C'`` (raw codes, not classes)."""
    if not code.is_self_orthogonal():
        raise ValueError("code is not self-orthogonal")
    if doubly_even and not code.is_doubly_even():
        return []
    target = code.length
    if isinstance(code, BinaryCode) and target % 2:
        return []
    level = {code}
    while level:
        sample = next(iter(level))
        if 2 * sample.dim == target:
            return sorted(level, key=lambda c: c.basis)
        nxt = set()
        for c in level:
            for s in supercodes_index2(c, doubly_even=doubly_even):
                nxt.add(s)
        level = nxt
    return []


def _check_budget(N, p, budget):
    limit = ENUMERATION_BUDGET.get(p) if budget is None else budget
    if limit is None:
        raise BudgetError(f"no enumeration budget configured for p = {p}")
    if N > limit:
        raise BudgetError(f"self-dual enumeration over F_{p} limited to length <= {limit}, got {N}")


def _start_code(N, p, contain_one):
    if p == 2:
        return BinaryCode.all_ones(N) if contain_one else BinaryCode.zero(N)
    return PrimeFieldCode.all_ones(p, N) if contain_one else PrimeFieldCode.zero(p, N)


def enumerate_self_dual(N, doubly_even=False, p=2, contain_one=None, budget=None):
    """Equivalence classes of self-dual codes of length ``N`` over ``F_p``.

    Depth-first over self-orthogonal extensions with class deduplication at
    each dimension.  For ``p = 2`` every self-dual code contains the all-ones
    vector and the search starts from ``<1>``.  For odd ``p`` the default is
    all self-dual codes; ``contain_one=True`` restricts to codes with
    ``1 in C`` (which needs ``p | N``).
    """
    _check_budget(N, p, budget)
    if contain_one is None:
        contain_one = p == 2
    if N % 2 or N == 0:
        return []
    if p == 2 and doubly_even and N % 8:
        return []
    if contain_one and (N % p):
        return []
    if p > 2 and doubly_even:
        raise ValueError("doubly-even is a binary notion")
    start = _start_code(N, p, contain_one)
    level = [start]
    while level and level[0].dim < N // 2:
        nxt = []
        for c in level:
            nxt.extend(supercodes_index2(c, doubly_even=doubly_even))
        classes = _class_dedupe(nxt)
        level = [cc.representative for cc in classes]
    return _class_dedupe(level)


def enumerate_self_orthogonal(N, p=2, contain_one=True, max_dim=None, budget=None):
    """Classes of self-orthogonal codes (containing 1 by default), all dimensions."""
    _check_budget(N, p, budget)
    if contain_one and (p == 2 and N % 2 or p > 2 and N % p):
        return []
    start = _start_code(N, p, contain_one)
    max_dim = N // 2 if max_dim is None else min(max_dim, N // 2)
    out = _class_dedupe([start])
    level = [start]
    while level and level[0].dim < max_dim:
        nxt = []
        for c in level:
            nxt.extend(supercodes_index2(c))
        classes = _class_dedupe(nxt)
        out.extend(classes)
        level = [cc.representative for cc in classes]
    return out


def all_self_orthogonal_codes(N, contain_one=True, max_dim=None):
    """Every binary self-orthogonal code (raw, not up to equivalence)."""
    start = BinaryCode.all_ones(N) if contain_one else BinaryCode.zero(N)
    if not start.is_self_orthogonal():
        return []
    max_dim = N // 2 if max_dim is None else min(max_dim, N // 2)
    out = [start]
    level = {start}
    while level and next(iter(level)).dim < max_dim:
        nxt = set()
        for c in level:
            nxt.update(supercodes_index2(c))
        out.extend(sorted(nxt, key=lambda c: c.basis))
        level = nxt
    return out


# ---------------------------------------------------------------------------
# shadows


def shadow_vectors(code):
    """``S(C) = {v : wt(v + w) = wt(v) mod 4 for all w in C}`` as ``(v0, C)``.

    For a self-dual code the condition is affine-linear in ``v``
    (``|v & w| = wt(w)/2 mod 2``), so ``S(C) = v0 + C``.
    """
    if not isinstance(code, BinaryCode) or not code.is_self_dual():
        raise NotSelfDualError("the shadow is defined here for binary self-dual codes")
    # solve <v, b_i> = wt(b_i)/2 for the basis rows
    rows = [(b, (_weight(b) // 2) % 2) for b in code.basis]
    # Gaussian elimination on augmented rows
    piv = []
    for b, t in rows:
        for p, pb, pt in piv:
            if (b >> p) & 1:
                b ^= pb
                t ^= pt
        if b:
            p = (b & -b).bit_length() - 1
            piv = [(q, qb ^ b, qt ^ t) if (qb >> p) & 1 else (q, qb, qt) for q, qb, qt in piv]
            piv.append((p, b, t))
        elif t:
            raise AssertionError("inconsistent shadow system")
    v0 = 0
    for p, _, t in piv:
        if t:
            v0 |= 1 << p
    return v0, code


def shadow(code):
    """Shadow enumerator ``2^(-n/2) hwe_C(x + y, i(x - y))`` as a 2-variable Polynomial."""
    from .enumerators import hamming_we
    from .exact import Polynomial, zeta

    if not isinstance(code, BinaryCode) or not code.is_self_dual():
        raise NotSelfDualError("shadow enumerator needs a binary self-dual code")
    i = zeta(4)
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    hwe = hamming_we(code)
    result = hwe.substitute([x + y, (x - y).scale(i)])
    return result.scale(Fraction(1, 2 ** (code.length // 2)))


# ---------------------------------------------------------------------------
# registry of named codes


def _registry_entry(name):
    if name in ("H8", "e8"):
        return hamming_code_8()
    if name == "tetracode":
        return tetracode()
    if name == "golay12":
        return ternary_golay_12()
    if name == "i2":
        return repetition_pairs(1)
    if name.startswith("i2^") and name[3:].isdigit() and int(name[3:]) >= 1:
        return repetition_pairs(int(name[3:]))
    if name.startswith("1^") and name[2:].isdigit() and int(name[2:]) >= 1:
        return BinaryCode.all_ones(int(name[2:]))
    return None


REGISTRY_NAMES = ("i2", "i2^k", "H8", "e8", "1^N", "tetracode", "golay12")


def named_code(name, p=None):
    """A code from the registry, or read from a file of generator rows.

    The file format is one row per line, written as digits ``0..p-1``;
    blank lines and lines starting with ``#`` are ignored.  Binary unless
    ``p`` is given.
    """
    code = _registry_entry(name)
    if code is not None:
        return code
    if os.path.isfile(name):
        with open(name) as fh:
            rows = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
        if not rows or len({len(r) for r in rows}) != 1:
            raise UnknownCodeError(f"{name}: rows must be non-empty and of equal length")
        if p in (None, 2):
            return BinaryCode.from_strings(rows)
        return PrimeFieldCode.from_strings(p, rows)
    raise UnknownCodeError(f"unknown code {name!r}; known: {', '.join(REGISTRY_NAMES)} or a file path")

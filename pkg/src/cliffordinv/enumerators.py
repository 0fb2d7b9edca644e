"""Weight enumerators of extended codes ``C(m) = C (x) F_{2^m}``.

A codeword of ``C(m)`` is an m-tuple ``(c_1, ..., c_m)`` of codewords of
``C``, i.e. an ``m x N`` matrix with rows in ``C``.  Its column ``j`` is a
vector ``v in F_p^m`` and contributes the variable ``x_v``; ``v`` is read
big-endian, so ``x_v`` is variable number ``v_1 p^(m-1) + ... + v_m``.  This
matches the basis ordering of the group generators.
"""

from __future__ import annotations

import itertools

import numpy as np

from .codes import BinaryCode, shadow_vectors
from .errors import BudgetError
from .exact import Polynomial
from .groups.generators import index_to_vector

__all__ = [
    "CWE_BUDGET",
    "cwe",
    "fwe",
    "project_fwe",
    "mu_M",
    "mu_m_of_code",
    "subcodes_with_ones",
    "subcode_sum",
    "h_m_explicit",
    "h_m_term_count",
    "gaussian_binomial",
    "genus_collapse",
    "hamming_we",
    "w_quad",
    "variable_names",
]

CWE_BUDGET = 1 << 24


def _p(code):
    return 2 if isinstance(code, BinaryCode) else code.p


def _word_array(code):
    n = code.length
    words = code.codewords()
    if isinstance(code, BinaryCode):
        arr = np.array([[(w >> j) & 1 for j in range(n)] for w in words], dtype=np.int64)
    else:
        arr = np.array(words, dtype=np.int64)
    return arr.reshape(len(words), n)


def variable_names(m, p=2):
    """``x00``, ``x01``, ... labels for the ``p^m`` variables."""
    return ["x" + "".join(map(str, index_to_vector(i, m, p))) for i in range(p**m)]


def _count_rows(idx, nvars):
    """Exponent vectors: per row of ``idx`` count occurrences of each variable."""
    R, N = idx.shape
    flat = (idx + (np.arange(R, dtype=np.int64) * nvars)[:, None]).ravel()
    return np.bincount(flat, minlength=R * nvars).reshape(R, nvars)


def cwe(code, m, budget=CWE_BUDGET):
    """Complete weight enumerator of ``C(m)`` in ``p^m`` variables."""
    if m < 1:
        raise ValueError("genus m must be at least 1")
    p = _p(code)
    size = len(code) ** m
    if size > budget:
        raise BudgetError(f"|C|^m = {size} exceeds the enumeration budget {budget}")
    W = _word_array(code)
    nvars = p**m
    # all (m-1)-prefixes, then one block per chunk of prefixes
    prefixes = np.zeros((1, code.length), dtype=np.int64)
    for _ in range(m - 1):
        prefixes = (prefixes[:, None, :] * p + W[None, :, :]).reshape(-1, code.length)
    acc = {}
    step = max(1, (1 << 18) // max(1, W.shape[0]))
    for start in range(0, prefixes.shape[0], step):
        block = prefixes[start : start + step]
        idx = (block[:, None, :] * p + W[None, :, :]).reshape(-1, code.length)
        exps = _count_rows(idx, nvars)
        uniq, counts = np.unique(exps, axis=0, return_counts=True)
        for e, c in zip(map(tuple, uniq.tolist()), counts.tolist()):
            acc[e] = acc.get(e, 0) + c
    return Polynomial(nvars, acc)


def fwe(code, m, budget=CWE_BUDGET):
    """The support of the full weight enumerator: array of shape ``(|C|^m, m, N)``.

    Each entry is the ``m x N`` matrix of an m-tuple of codewords (one basis
    tensor ``e_c`` with coefficient 1).
    """
    size = len(code) ** m
    if size > budget:
        raise BudgetError(f"|C|^m = {size} exceeds the enumeration budget {budget}")
    W = _word_array(code)
    idx = np.array(list(itertools.product(range(W.shape[0]), repeat=m)), dtype=np.int64)
    return W[idx]


def project_fwe(matrices, p=2):
    """Replace each basis tensor by the monomial of its columns."""
    matrices = np.asarray(matrices)
    count, m, N = matrices.shape
    weights = p ** np.arange(m - 1, -1, -1)
    idx = np.einsum("rmn,m->rn", matrices, weights)
    exps = _count_rows(idx, p**m)
    uniq, counts = np.unique(exps, axis=0, return_counts=True)
    return Polynomial(p**m, {tuple(e): int(c) for e, c in zip(uniq.tolist(), counts.tolist())})


def _as_rows(M):
    M = np.asarray(M, dtype=np.int64) % 2
    if M.ndim != 2:
        raise ValueError("M must be an m x N matrix")
    return M


def mu_M(M):
    """Monic monomial of the columns of ``M`` and whether it is a diagonal invariant.

    The flag is true iff every pair of rows, a row with itself included,
    has even inner product.
    """
    M = _as_rows(M)
    m, N = M.shape
    weights = 2 ** np.arange(m - 1, -1, -1)
    cols = weights @ M
    exps = np.bincount(cols, minlength=2**m)
    gram = (M @ M.T) % 2
    return Polynomial.monomial(tuple(int(e) for e in exps)), not gram.any()


def _span_dim_with_ones(rows, n):
    return BinaryCode(n, list(rows) + [(1 << n) - 1]).dim


def mu_m_of_code(D, m, N=None):
    """``mu_m(D) = sum of mu_M over m x N matrices M with <M, 1> = D``.

    Zero when ``1`` is not in ``D`` or ``dim D > m + 1``.
    """
    N = D.length if N is None else N
    if N != D.length:
        raise ValueError("N must equal the code length")
    nvars = 2**m
    if not D.contains_ones() or D.dim > m + 1:
        return Polynomial(nvars)
    words = D.codewords()
    weights = [1 << (m - 1 - i) for i in range(m)]
    acc = {}
    for tup in itertools.product(words, repeat=m):
        if _span_dim_with_ones(tup, N) != D.dim:
            continue
        exps = [0] * nvars
        for j in range(N):
            v = 0
            for w, wt in zip(tup, weights):
                if (w >> j) & 1:
                    v += wt
            exps[v] += 1
        e = tuple(exps)
        acc[e] = acc.get(e, 0) + 1
    return Polynomial(nvars, acc)


def subcodes_with_ones(code):
    """Every subcode ``D`` with ``1 in D <= C`` (as BinaryCode objects)."""
    if not code.contains_ones():
        return []
    start = BinaryCode.all_ones(code.length)
    seen = {frozenset(start.codewords())}
    out, frontier = [start], [start]
    words = code.codewords()
    while frontier:
        nxt = []
        for D in frontier:
            for w in words:
                if w in D:
                    continue
                E = D.extend(w)
                key = frozenset(E.codewords())
                if key not in seen:
                    seen.add(key)
                    out.append(E)
                    nxt.append(E)
        frontier = nxt
    return out


def subcode_sum(code, m):
    """``sum over 1 in D <= C of mu_m(D)``; equals ``cwe(C(m))`` when 1 is in C."""
    total = Polynomial(2**m)
    for D in subcodes_with_ones(code):
        total = total + mu_m_of_code(D, m)
    return total


# ---------------------------------------------------------------------------
# the explicit degree-8 invariant


def _subspaces(m, k):
    """All k-dimensional subspaces of F_2^m, each as a frozenset of vectors (ints)."""
    seen = set()
    out = []
    for basis in itertools.combinations(range(1, 2**m), k):
        span = {0}
        for b in basis:
            span |= {s ^ b for s in span}
        if len(span) != 2**k:
            continue
        fs = frozenset(span)
        if fs not in seen:
            seen.add(fs)
            out.append(fs)
    return out


def gaussian_binomial(m, k, q=2):
    num, den = 1, 1
    for i in range(k):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


H8_COEFFS = (1, 14, 168, 1344)
MAX_H_GENUS = 4


def h_m_explicit(m):
    """``h_m`` as the sum over affine subspaces of dimensions 0..3 of ``F_2^m``."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if m > MAX_H_GENUS:
        raise BudgetError(f"subspace enumeration limited to m <= {MAX_H_GENUS}")
    nvars = 2**m
    acc = {}
    # vectors as ints coincide with big-endian variable indices
    for k, coeff in enumerate(H8_COEFFS):
        if k > m:
            break
        power = 8 >> k
        for U in _subspaces(m, k):
            cosets = set()
            for d in range(nvars):
                coset = frozenset(d ^ u for u in U)
                if coset in cosets:
                    continue
                cosets.add(coset)
                exps = [0] * nvars
                for v in coset:
                    exps[v] = power
                e = tuple(exps)
                acc[e] = acc.get(e, 0) + coeff
    return Polynomial(nvars, acc)


def h_m_term_count(m):
    """``sum_k coeff_k [m choose k]_2 2^(m-k)``, which should be ``2^(4m)``."""
    return sum(
        c * gaussian_binomial(m, k) * 2 ** (m - k) for k, c in enumerate(H8_COEFFS) if k <= m
    )


def genus_collapse(poly, p=2):
    """Identify ``x_(1, u)`` with ``x_(0, u)``: genus ``m`` to genus ``m - 1``.

    The first coordinate of the variable label is dropped, i.e. variable
    ``i`` maps to ``i mod p^(m-1)``.  On complete weight enumerators this
    gives ``collapse(cwe(C, m)) = |C| cwe(C, m - 1)``, since every choice of
    the first row of the m-tuple yields the same monomial.
    """
    n = poly.nvars
    half = n // p
    if half * p != n or half < 1:
        raise ValueError("polynomial does not live in p^m variables with m >= 1")
    return poly.rename([i % half for i in range(n)], half)


def hamming_we(code):
    """``sum_c x^(n - wt c) y^(wt c)``."""
    n = code.length
    dist = code.weight_distribution()
    return Polynomial(2, {(n - w, w): c for w, c in enumerate(dist) if c})


def w_quad(code, v0):
    """The four-variable refinement of ``hwe`` relative to a shadow vector ``v0``.

    ``sum_{v in C} x^(n - wt v0 - a) y^a z^(wt v0 - b) w^b`` with
    ``a = wt((1 + v0) & v)`` and ``b = wt(v0 & v)``.
    """
    if not isinstance(code, BinaryCode):
        raise TypeError("w_quad needs a binary code")
    from .codes import _parse_word

    v0 = _parse_word(v0)
    s0, _ = shadow_vectors(code)
    if code.reduce(v0 ^ s0) != 0:
        raise ValueError("v0 is not in the shadow of the code")
    n = code.length
    ones = code.ones
    w0 = v0.bit_count()
    acc = {}
    for v in code.codewords():
        a = ((ones ^ v0) & v).bit_count()
        b = (v0 & v).bit_count()
        e = (n - w0 - a, a, w0 - b, b)
        acc[e] = acc.get(e, 0) + 1
    return Polynomial(4, acc)

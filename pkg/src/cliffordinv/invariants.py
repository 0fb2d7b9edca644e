"""Computational checks of the invariant theory of Clifford groups.

Everything here is exact.  Group averages are taken over polynomial
orbits under the generators (see ``groups.reynolds``); invariant spaces are
computed directly from the generators and compared with spans of complete
weight enumerators.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .codes import (
    BinaryCode,
    _class_dedupe,
    all_self_orthogonal_codes,
    enumerate_self_dual,
    enumerate_self_orthogonal,
    self_dual_supercodes,
    supercodes_index2,
)
from .enumerators import cwe, mu_m_of_code
from .errors import BudgetError
from .exact import Polynomial, nullspace, poly_rank
from .exact.linalg import polys_to_rows
from .groups.closure import closure_for
from .groups.generators import (
    GroupKind,
    GroupSpec,
    _hadamard,
    _slot,
    clifford_generators,
    parabolic_generators,
)
from .groups.molien import molien_series
from .groups.reynolds import echelon_basis, invariant_space, reynolds_average

__all__ = [
    "ParabolicBasis",
    "parabolic_basis",
    "averaging_operator",
    "lemma_rhs",
    "verify_averaging_lemma",
    "TriangularEntry",
    "triangular_operator_check",
    "RungeReport",
    "verify_runge",
    "AveragingReport",
    "PRODUCT_RANGES",
    "verify_averaging_theorem",
    "quadratic_form",
    "harmonic_degree8",
    "harmonic_invariants",
    "HarmonicReport",
    "verify_harmonic",
    "same_span",
]

VARIANTS = ("real", "complex", "odd_p")
# the two printed forms of the normalising product
PRODUCT_RANGES = ("1<=i<=r", "0<=i<r")
PRINTED_RANGE = {"real": "1<=i<=r", "complex": "0<=i<r", "odd_p": "0<=i<r"}


def same_span(a, b):
    """Whether two lists of polynomials span the same space."""
    ea, eb = echelon_basis(a), echelon_basis(b)
    return len(ea) == len(eb) and all(x == y for x, y in zip(ea, eb))


def quadratic_form(nvars):
    """``sum_v x_v^2``, the genus-m complete weight enumerator of ``i_2``."""
    return Polynomial(nvars, {tuple(2 * (j == i) for j in range(nvars)): 1 for i in range(nvars)})


# ---------------------------------------------------------------------------
# parabolic invariants


@dataclass
class ParabolicBasis:
    N: int
    m: int
    classes: list
    polynomials: list
    rank: int

    def __len__(self):
        return len(self.polynomials)

    @property
    def independent(self):
        return self.rank == len(self.polynomials)


def parabolic_basis(N, m, check_fixed_space=False):
    """``mu_m(C)`` for the classes of self-orthogonal codes containing 1 of dim <= m + 1.

    With ``check_fixed_space`` the span is compared against the parabolic
    invariants computed directly from the generators of ``P``.
    """
    if N > 8 or m > 3:
        raise BudgetError("parabolic_basis is limited to N <= 8 and m <= 3")
    classes = enumerate_self_orthogonal(N, contain_one=True, max_dim=m + 1)
    polys = [mu_m_of_code(cc.representative, m) for cc in classes]
    basis = ParabolicBasis(N, m, classes, polys, poly_rank(polys) if polys else 0)
    if not basis.independent:
        raise ArithmeticError("parabolic invariants mu_m(C) are linearly dependent")
    if check_fixed_space:
        direct = invariant_space(parabolic_generators(m), N) if N % 2 == 0 else []
        if not same_span(polys, direct):
            raise ArithmeticError("mu_m(C) do not span the parabolic invariants")
    return basis


# ---------------------------------------------------------------------------
# the averaging operator X_P (h x I)


def _redundancy(code):
    two_r = code.length - 2 * code.dim
    if two_r < 0 or two_r % 2:
        raise ValueError("code must be self-orthogonal of even length")
    return two_r // 2


def averaging_operator(poly, m):
    """``X_P (h x I) poly``: apply ``h`` in the first slot, then average over ``P``."""
    hmat = _slot(_hadamard(), 0, m)
    return reynolds_average(parabolic_generators(m), poly.act(hmat))


def lemma_rhs(code, m):
    """``(1/(2^m-1)) [(2^(m-r) - 2^r) cwe(C(m)) + 2^(-r) sum cwe(C'(m))]``, ``[C':C] = 2``."""
    r = _redundancy(code)
    two = Fraction(2)
    base = cwe(code, m).scale(two ** (m - r) - two**r)
    acc = base
    for sup in supercodes_index2(code):
        acc = acc + cwe(sup, m).scale(two ** (-r))
    return acc.scale(Fraction(1, 2**m - 1))


def verify_averaging_lemma(code, m):
    """Exact check of the averaging lemma for one self-orthogonal ``C`` containing 1."""
    if not isinstance(code, BinaryCode):
        raise TypeError("binary code expected")
    if not code.is_self_orthogonal() or not code.contains_ones():
        raise ValueError("C must be self-orthogonal and contain the all-ones vector")
    if m > 2:
        raise BudgetError("the averaging lemma check is limited to m <= 2")
    return averaging_operator(cwe(code, m), m) == lemma_rhs(code, m)


@dataclass
class TriangularEntry:
    code: BinaryCode
    r: int
    diagonal: Fraction
    lemma_holds: bool


def triangular_operator_check(N, m):
    """The operator ``X_P(h x I)`` on the spanning set ``cwe(C(m))``.

    By the averaging lemma the image of ``cwe(C(m))`` is a multiple of itself
    plus enumerators of strictly larger codes.  The diagonal entry is
    ``(2^(m-r) - 2^r)/(2^m - 1)``; it is 1 exactly for the maximal
    (self-dual) codes.
    """
    out = []
    for cc in enumerate_self_orthogonal(N, contain_one=True):
        c = cc.representative
        r = _redundancy(c)
        diag = (Fraction(2) ** (m - r) - Fraction(2) ** r) / (2**m - 1)
        out.append(TriangularEntry(c, r, diag, verify_averaging_lemma(c, m)))
    return out


# ---------------------------------------------------------------------------
# Runge's theorem


def _spec(variant, m, p=2):
    if variant == "real":
        return GroupSpec(GroupKind.REAL, m)
    if variant == "complex":
        return GroupSpec(GroupKind.COMPLEX, m)
    if variant == "odd_p":
        return GroupSpec(GroupKind.ODD_PRIME, m, p)
    raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")


def _spanning_codes(N, variant, p):
    if variant == "real":
        return enumerate_self_dual(N)
    if variant == "complex":
        return enumerate_self_dual(N, doubly_even=True)
    return enumerate_self_dual(N, p=p, contain_one=True)


@dataclass
class RungeReport:
    N: int
    m: int
    variant: str
    p: int
    invariant_dim: int
    molien_coefficient: int
    code_classes: int
    cwe_rank: int
    spans: bool
    basis_expected: bool
    is_basis: bool
    seconds: float = 0.0

    @property
    def ok(self):
        agree = self.invariant_dim == self.molien_coefficient
        if self.basis_expected:
            agree = agree and self.is_basis
        return agree and self.spans

    def as_dict(self):
        d = dict(self.__dict__)
        d["ok"] = self.ok
        return d


def verify_runge(N, m, variant="real", p=2):
    """Invariant space of degree ``N`` against the span of code enumerators.

    Three numbers must agree: the dimension of the space computed from the
    generators, the Molien coefficient, and (real case, ``m >= N/2 - 1``)
    the number of self-dual code classes.
    """
    t0 = time.perf_counter()
    spec = _spec(variant, m, p)
    gens = clifford_generators(spec)
    space = invariant_space(gens, N)
    molien = molien_series(closure_for(spec), N)[N]
    classes = _spanning_codes(N, variant, spec.p)
    enums = [cwe(cc.representative, m) for cc in classes]
    r = poly_rank(enums) if enums else 0
    spans = same_span(enums, space)
    basis_expected = variant == "real" and m >= N // 2 - 1
    return RungeReport(
        N=N,
        m=m,
        variant=variant,
        p=spec.p,
        invariant_dim=len(space),
        molien_coefficient=molien,
        code_classes=len(classes),
        cwe_rank=r,
        spans=spans,
        basis_expected=basis_expected,
        is_basis=spans and r == len(classes),
        seconds=time.perf_counter() - t0,
    )


# ---------------------------------------------------------------------------
# the averaging theorem


def _product(m, r, p, which):
    q = p**m
    idx = range(1, r + 1) if which == "1<=i<=r" else range(0, r)
    out = Fraction(1)
    for i in idx:
        out /= q + p**i
    return out


@dataclass
class AveragingReport:
    code: object
    m: int
    variant: str
    r: int
    lhs: Polynomial
    supercodes: int
    rhs: dict = field(default_factory=dict)
    printed_range: str = ""
    seconds: float = 0.0

    @property
    def matches(self):
        """The product ranges for which the identity holds exactly."""
        return [k for k in PRODUCT_RANGES if self.rhs[k] == self.lhs]

    @property
    def equal(self):
        """The identity with the product exactly as printed for this variant."""
        return self.rhs[self.printed_range] == self.lhs

    def as_dict(self):
        return {
            "code": self.code.to_strings(),
            "m": self.m,
            "variant": self.variant,
            "r": self.r,
            "supercodes": self.supercodes,
            "printed_range": self.printed_range,
            "equal_as_printed": self.equal,
            "matching_ranges": self.matches,
            "lhs_hash": self.lhs.canonical_hash(),
            "seconds": round(self.seconds, 3),
        }


def verify_averaging_theorem(code, m, variant="real"):
    """Average ``cwe(C(m))`` over the whole group and compare with the supercode sum.

    The right side is evaluated with both forms of the normalising product;
    ``report.equal`` uses the one printed for the variant and
    ``report.matches`` lists every form that holds.
    """
    t0 = time.perf_counter()
    p = 2 if isinstance(code, BinaryCode) else code.p
    if variant == "odd_p" and p == 2:
        raise ValueError("odd_p variant needs a code over an odd prime field")
    if variant != "odd_p" and p != 2:
        raise ValueError(f"{variant} variant needs a binary code")
    if not code.is_self_orthogonal() or not code.contains_ones():
        raise ValueError("C must be self-orthogonal and contain the all-ones vector")
    doubly_even = variant == "complex"
    if doubly_even and not code.is_doubly_even():
        raise ValueError("complex variant needs a doubly-even code")
    spec = _spec(variant, m, p)
    enum = cwe(code, m)
    lhs = reynolds_average(clifford_generators(spec), enum)
    r = _redundancy(code)
    sups = self_dual_supercodes(code, doubly_even=doubly_even)
    total = Polynomial(enum.nvars)
    for s in sups:
        total = total + cwe(s, m)
    rhs = {k: total.scale(_product(m, r, p, k)) for k in PRODUCT_RANGES}
    return AveragingReport(
        code=code,
        m=m,
        variant=variant,
        r=r,
        lhs=lhs,
        supercodes=len(sups),
        rhs=rhs,
        printed_range=PRINTED_RANGE[variant],
        seconds=time.perf_counter() - t0,
    )


def doubly_even_codes_with_one(N):
    """Classes of doubly-even self-orthogonal binary codes containing 1."""
    if N % 8:
        return []
    raw = [c for c in all_self_orthogonal_codes(N) if c.is_doubly_even()]
    return _class_dedupe(raw)


# ---------------------------------------------------------------------------
# harmonic invariants


def _harmonic_combinations(polys):
    """Kernel of the Laplacian restricted to ``span(polys)``, as polynomials."""
    if not polys:
        return []
    images = [q.laplacian() for q in polys]
    if not any(images):
        return echelon_basis(polys)
    rows, index = polys_to_rows(images)
    # columns = polys; one equation per monomial of the image
    system = [[rows[j][k] for j in range(len(polys))] for k in range(len(index))]
    out = []
    for v in nullspace(system, len(polys)):
        acc = Polynomial(polys[0].nvars)
        for c, q in zip(v, polys):
            if c:
                acc = acc + q.scale(c)
        out.append(acc)
    return echelon_basis(out)


def _primitive(poly):
    import math

    coeffs = list(poly.terms.values())
    den = 1
    for c in coeffs:
        den = math.lcm(den, Fraction(c).denominator)
    scaled = poly.scale(den)
    g = 0
    for c in scaled.terms.values():
        g = math.gcd(g, int(c))
    scaled = scaled.scale(Fraction(1, g))
    lead = scaled.sorted_terms()[0][1]
    return scaled if lead > 0 else -scaled


def harmonic_degree8(m):
    """The harmonic element of ``span{q^4, cwe(H8(m))}``, integer and primitive."""
    from .codes import hamming_code_8

    if m > 2:
        raise BudgetError("harmonic_degree8 is limited to m <= 2")
    q4 = quadratic_form(2**m) ** 4
    h = cwe(hamming_code_8(), m)
    kernel = _harmonic_combinations([q4, h])
    if len(kernel) != 1:
        raise ArithmeticError(f"expected one harmonic combination, found {len(kernel)}")
    return _primitive(kernel[0])


def harmonic_invariants(m, degree):
    """Basis of the harmonic invariants of ``C_m`` in the given degree."""
    space = invariant_space(clifford_generators(GroupSpec(GroupKind.REAL, m)), degree)
    return _harmonic_combinations(space)


@dataclass
class HarmonicReport:
    m: int
    dims: dict
    harmonic_dims: dict
    f8: Polynomial

    @property
    def ok(self):
        return self.harmonic_dims.get(8) == 1 and self.harmonic_dims.get(10) == 0


def verify_harmonic(m):
    """Degree-8 and degree-10 harmonic invariants, counted by exact rank."""
    if m > 2:
        raise BudgetError("harmonic check is limited to m <= 2")
    gens = clifford_generators(GroupSpec(GroupKind.REAL, m))
    dims, hdims = {}, {}
    for d in (8, 10):
        space = invariant_space(gens, d)
        dims[d] = len(space)
        hdims[d] = len(_harmonic_combinations(space))
    return HarmonicReport(m, dims, hdims, harmonic_degree8(m))

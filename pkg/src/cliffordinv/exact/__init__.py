"""Exact arithmetic: rationals, Q(sqrt 2), cyclotomic fields, matrices, polynomials, series."""

from fractions import Fraction as Rational

from .fields import (
    QSQRT2,
    Cyclotomic,
    FieldElement,
    NumberField,
    SqrtTwo,
    as_fraction,
    canonical_hash,
    conj,
    cyclotomic_field,
    cyclotomic_polynomial,
    embed_sqrt2,
    is_rational,
    simplify,
    sqrt2,
    sqrt2_in,
    to_complex,
    zeta,
)
from .linalg import (
    express_in_span,
    hermite_normal_form,
    hnf_determinant,
    in_row_lattice,
    nullspace,
    poly_rank,
    rank,
    rref,
)
from .matrix import ExactMatrix, berkowitz
from .poly import Polynomial, monomials
from .serialize import SCHEMA_VERSION, dumps, to_jsonable, to_plain
from .series import TruncatedSeries, series_inverse

__all__ = [
    "SCHEMA_VERSION",
    "dumps",
    "to_jsonable",
    "to_plain",
    "Rational",
    "QSQRT2",
    "Cyclotomic",
    "FieldElement",
    "NumberField",
    "SqrtTwo",
    "as_fraction",
    "canonical_hash",
    "conj",
    "cyclotomic_field",
    "cyclotomic_polynomial",
    "embed_sqrt2",
    "is_rational",
    "simplify",
    "sqrt2",
    "sqrt2_in",
    "to_complex",
    "zeta",
    "express_in_span",
    "hermite_normal_form",
    "hnf_determinant",
    "in_row_lattice",
    "nullspace",
    "poly_rank",
    "rank",
    "rref",
    "ExactMatrix",
    "berkowitz",
    "Polynomial",
    "monomials",
    "TruncatedSeries",
    "series_inverse",
]

"""Small worked examples with hand-derived values."""

from fractions import Fraction

import numpy as np

from cliffordinv.codes import BinaryCode, canonical_form, hamming_code_8, repetition_pairs, shadow, supercodes_index2
from cliffordinv.enumerators import cwe, fwe, genus_collapse, h_m_explicit, mu_M, mu_m_of_code, project_fwe
from cliffordinv.exact import ExactMatrix, Polynomial, SqrtTwo, TruncatedSeries, series_inverse, zeta
from cliffordinv.groups import (
    GroupKind,
    GroupSpec,
    clifford_generators,
    closure_for,
    extraspecial_generators,
    molien_series,
    predicted_order,
    reynolds_average,
)
from cliffordinv.invariants import parabolic_basis, verify_averaging_lemma
from cliffordinv.lattices import affine_subspaces, barnes_wall, chi_vector

x0, x1 = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
q = x0 * x0 + x1 * x1


def test_scalars():
    assert SqrtTwo(1, 1) * SqrtTwo(1, -1) == -1
    assert SqrtTwo(0, Fraction(1, 2)) ** 2 == Fraction(1, 2)
    assert zeta(8) ** 2 == zeta(8, 2)
    assert (zeta(8) ** 2) ** 2 == -1


def test_small_matrices():
    s1 = ExactMatrix([[0, 1], [1, 0]])
    s2 = ExactMatrix([[1, 0], [0, -1]])
    assert s1.det() == -1
    assert s2.char_poly() == [-1, 0, 1]


def test_geometric_series():
    assert series_inverse(TruncatedSeries([1, -1], 4)).coeffs == [1] * 5
    assert series_inverse(TruncatedSeries([1, 1], 2)).coeffs == [1, -1, 1]
    d = TruncatedSeries([1, 0, -1], 10) * TruncatedSeries([1, 0, 0, 0, 0, 0, 0, 0, -1], 10)
    assert series_inverse(d).coeffs == [1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 2]


def test_extraspecial_generators_square_to_scalars():
    gens = extraspecial_generators(2)
    assert len(gens) == 4 and all(g.dim == 4 for g in gens)
    for g in gens:
        sq = g @ g
        assert sq.is_identity() or (-sq).is_identity()


def test_order_formulas():
    assert predicted_order(GroupSpec(GroupKind.REAL, 3)) == 5160960
    assert predicted_order(GroupSpec(GroupKind.COMPLEX, 3)) == 743178240
    assert predicted_order(GroupSpec(GroupKind.EXTRASPECIAL, 2)) == 32


def test_reynolds_examples():
    gens = clifford_generators(GroupSpec(GroupKind.REAL, 1))
    assert reynolds_average(gens, q) == q
    # Laplacian^2 commutes with the average: 24 = a * 64
    assert reynolds_average(gens, x0**4) == (q * q).scale(Fraction(3, 8))
    c = cwe(BinaryCode.from_strings(["1111", "0011"]), 1)
    assert reynolds_average(gens, c) == c


def test_extraspecial_molien():
    assert molien_series(closure_for(GroupSpec(GroupKind.EXTRASPECIAL, 1)), 6) == [1, 0, 1, 0, 2, 0, 2]


def test_code_examples():
    assert BinaryCode.from_strings(["11"]).dual() == BinaryCode.from_strings(["11"])
    assert hamming_code_8().dual() == hamming_code_8()
    assert BinaryCode.zero(4).dual() == BinaryCode.full(4)
    assert not BinaryCode.from_strings(["11"]).is_doubly_even()
    assert not repetition_pairs(4).is_doubly_even()
    a = canonical_form(BinaryCode.from_strings(["1010", "0101"]))
    b = canonical_form(BinaryCode.from_strings(["1100", "0011"]))
    assert a.key == b.key
    assert canonical_form(hamming_code_8()).key != canonical_form(repetition_pairs(4)).key


def test_supercodes_of_1111():
    sup = supercodes_index2(BinaryCode.all_ones(4))
    assert len(sup) == 3
    assert len({canonical_form(c).key for c in sup}) == 1
    assert supercodes_index2(hamming_code_8()) == []


def test_shadow_examples():
    x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    assert shadow(BinaryCode.from_strings(["11"])) == (x * y).scale(2)
    h = hamming_code_8()
    assert shadow(h) == x**8 + (x**4 * y**4).scale(14) + y**8


def test_cwe_examples():
    i2 = BinaryCode.from_strings(["11"])
    assert cwe(i2, 1) == q
    v = [Polynomial.variable(4, k) for k in range(4)]
    assert cwe(i2, 2) == sum((t * t for t in v[1:]), v[0] * v[0])
    assert cwe(hamming_code_8(), 1) == x0**8 + (x0**4 * x1**4).scale(14) + x1**8
    c = BinaryCode.from_strings(["1111", "0011"])
    assert project_fwe(fwe(c, 2)) == cwe(c, 2)
    assert len(fwe(hamming_code_8(), 2)) == 16**2


def test_mu_examples():
    mono, flag = mu_M(np.array([[1, 1], [1, 1]]))
    assert mono == Polynomial.monomial((0, 0, 0, 2)) and flag
    # columns (1,1) and (0,1): x11 * x01 in the big-endian labelling
    mono, flag = mu_M(np.array([[1, 0], [1, 1]]))
    assert mono == Polynomial.monomial((0, 1, 0, 1)) and not flag
    mono, flag = mu_M(np.zeros((2, 3), dtype=int))
    assert mono == Polynomial.monomial((3, 0, 0, 0)) and flag
    assert mu_m_of_code(BinaryCode.from_strings(["11"]), 1) == q
    assert not mu_m_of_code(BinaryCode.from_strings(["1111", "0011", "0101"]), 1)


def test_collapse_examples():
    h = hamming_code_8()
    # every choice of the first row gives the same monomial, hence the factor |C|
    assert genus_collapse(cwe(h, 2)) == cwe(h, 1).scale(16)
    assert genus_collapse(h_m_explicit(2)) == h_m_explicit(1).scale(16)


def test_parabolic_examples():
    assert len(parabolic_basis(2, 1)) == 1
    assert len(parabolic_basis(8, 1)) == 3
    assert len(parabolic_basis(8, 3)) == 7


def test_averaging_lemma_examples():
    assert verify_averaging_lemma(BinaryCode.all_ones(4), 1)
    assert verify_averaging_lemma(BinaryCode.all_ones(6), 2)
    assert verify_averaging_lemma(hamming_code_8(), 1)


def test_affine_subspace_examples():
    whole = [U for U in affine_subspaces(1) if U.dim == 1]
    assert [chi_vector(U) for U in whole] == [(1, 1)]
    assert (1, 0, 0, 0) in [chi_vector(U) for U in affine_subspaces(2, 0)]


def test_l1_is_a_scaled_square_lattice():
    L = barnes_wall(1)
    assert L.det() == 4 and L.minimum() == (2, 4)

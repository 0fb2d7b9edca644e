import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliffordinv.codes import BinaryCode, enumerate_self_dual, hamming_code_8, shadow_vectors, ternary_golay_12, tetracode
from cliffordinv.enumerators import (
    cwe,
    fwe,
    gaussian_binomial,
    genus_collapse,
    h_m_explicit,
    h_m_term_count,
    hamming_we,
    mu_M,
    mu_m_of_code,
    project_fwe,
    variable_names,
    w_quad,
)
from cliffordinv.errors import BudgetError
from cliffordinv.exact import Polynomial
from cliffordinv.groups import GroupKind, GroupSpec, clifford_generators, is_invariant

codes8 = st.lists(st.integers(0, 255), min_size=1, max_size=3).map(lambda rows: BinaryCode(8, rows))


@pytest.mark.parametrize("m", [1, 2])
@pytest.mark.parametrize("N", [2, 4, 6, 8])
def test_self_dual_cwe_is_clifford_invariant(N, m):
    gens = clifford_generators(GroupSpec(GroupKind.REAL, m))
    for cc in enumerate_self_dual(N):
        assert is_invariant(cwe(cc.representative, m), gens)


def test_doubly_even_cwe_is_complex_invariant():
    gens = clifford_generators(GroupSpec(GroupKind.COMPLEX, 2))
    assert is_invariant(cwe(hamming_code_8(), 2), gens)


def test_ternary_cwe_invariance_needs_the_ones_vector():
    gens = clifford_generators(GroupSpec(GroupKind.ODD_PRIME, 1, 3))
    assert is_invariant(cwe(ternary_golay_12(), 1), gens)
    # the tetracode is self-dual but does not contain 1
    assert not is_invariant(cwe(tetracode(), 1), gens)


@given(codes8, st.integers(2, 3))
def test_genus_collapse(code, m):
    assert genus_collapse(cwe(code, m)) == cwe(code, m - 1).scale(len(code))


@given(codes8, st.integers(1, 2))
def test_cwe_is_the_projected_fwe(code, m):
    assert project_fwe(fwe(code, m)) == cwe(code, m)
    assert cwe(code, m).coefficient_sum() == len(code) ** m


@given(codes8)
def test_macwilliams(code):
    x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    lhs = hamming_we(code).substitute([x + y, x - y])
    assert lhs == hamming_we(code.dual()).scale(len(code))


def test_genus_one_cwe_is_hamming_enumerator():
    h = hamming_code_8()
    assert cwe(h, 1) == hamming_we(h)


def test_variable_names_big_endian():
    assert variable_names(2) == ["x00", "x01", "x10", "x11"]


def test_mu_M():
    mono, flag = mu_M(np.array([[1, 1, 0, 0], [0, 1, 1, 0]]))
    assert mono == Polynomial.monomial((1, 1, 1, 1))
    assert not flag  # the rows meet in one coordinate
    mono, flag = mu_M(np.array([[1, 1, 1, 1], [0, 0, 1, 1]]))
    assert mono == Polynomial.monomial((0, 0, 2, 2))
    assert flag


def test_mu_m_vanishes_outside_range():
    assert not mu_m_of_code(BinaryCode.from_strings(["1100"]), 1)
    big = BinaryCode.from_strings(["11000000", "00110000", "00001100", "11111111"])
    assert not mu_m_of_code(big, 2)
    assert mu_m_of_code(BinaryCode.all_ones(4), 1)


def test_gaussian_binomials():
    assert [gaussian_binomial(3, k) for k in range(4)] == [1, 7, 7, 1]
    assert gaussian_binomial(4, 2) == 35


@pytest.mark.parametrize("m", [1, 2, 3])
def test_h_m_matches_hamming_cwe(m):
    assert h_m_explicit(m) == cwe(hamming_code_8(), m)


def test_h_m_term_count():
    for m in range(1, 6):
        assert h_m_term_count(m) == 16**m
    with pytest.raises(BudgetError):
        h_m_explicit(5)


def test_cwe_budget():
    with pytest.raises(BudgetError):
        cwe(hamming_code_8(), 3, budget=100)


def test_w_quad_requires_a_shadow_vector():
    c = enumerate_self_dual(6)[0].representative
    v0, _ = shadow_vectors(c)
    W = w_quad(c, v0)
    assert W.coefficient_sum() == len(c)
    bad = next(w for w in range(64) if c.reduce(w ^ v0) != 0)
    with pytest.raises(ValueError):
        w_quad(c, bad)

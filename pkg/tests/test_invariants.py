from fractions import Fraction

import pytest

from cliffordinv.codes import BinaryCode, PrimeFieldCode, enumerate_self_orthogonal, ternary_golay_12
from cliffordinv.errors import BudgetError
from cliffordinv.exact import Polynomial
from cliffordinv.invariants import (
    PRINTED_RANGE,
    doubly_even_codes_with_one,
    harmonic_degree8,
    harmonic_invariants,
    parabolic_basis,
    quadratic_form,
    same_span,
    triangular_operator_check,
    verify_averaging_lemma,
    verify_averaging_theorem,
    verify_harmonic,
    verify_runge,
)


def test_quadratic_form():
    assert quadratic_form(2) == Polynomial.variable(2, 0) ** 2 + Polynomial.variable(2, 1) ** 2


def test_same_span():
    x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    assert same_span([x, y], [x + y, x - y])
    assert not same_span([x], [y])


@pytest.mark.parametrize("N,m,size", [(2, 1, 1), (8, 1, 3), (8, 2, 5), (6, 2, 3)])
def test_parabolic_basis(N, m, size):
    b = parabolic_basis(N, m, check_fixed_space=True)
    assert len(b) == size and b.independent


def test_parabolic_budget():
    with pytest.raises(BudgetError):
        parabolic_basis(10, 1)


@pytest.mark.parametrize("N", [2, 4, 6])
@pytest.mark.parametrize("m", [1, 2])
def test_averaging_lemma(N, m):
    for cc in enumerate_self_orthogonal(N):
        assert verify_averaging_lemma(cc.representative, m)


def test_triangular_diagonal():
    entries = triangular_operator_check(6, 2)
    for e in entries:
        assert e.lemma_holds
        assert (e.diagonal == 1) == (e.r == 0)
    assert {e.r: e.diagonal for e in entries}[1] == Fraction(2 - 2, 3)


@pytest.mark.parametrize("N,m,dim", [(2, 1, 1), (4, 1, 1), (5, 1, 0), (8, 1, 2), (8, 2, 2), (6, 2, 1)])
def test_runge_real(N, m, dim):
    r = verify_runge(N, m)
    assert r.ok and r.invariant_dim == dim == r.molien_coefficient


def test_runge_complex():
    r = verify_runge(8, 1, "complex")
    assert r.ok and r.invariant_dim == 1


@pytest.mark.parametrize("N", [4, 6])
def test_runge_ternary_empty(N):
    r = verify_runge(N, 1, "odd_p", 3)
    assert r.ok and r.invariant_dim == 0


def test_printed_ranges():
    assert PRINTED_RANGE == {"real": "1<=i<=r", "complex": "0<=i<r", "odd_p": "0<=i<r"}


@pytest.mark.parametrize("N,m,supercodes", [(4, 1, 3), (6, 2, 15), (8, 1, 135)])
def test_averaging_theorem_real_ones(N, m, supercodes):
    rep = verify_averaging_theorem(BinaryCode.all_ones(N), m, "real")
    assert rep.supercodes == supercodes
    assert rep.equal and rep.matches == ["1<=i<=r"]


def test_averaging_theorem_complex():
    counts = []
    for cc in doubly_even_codes_with_one(8):
        rep = verify_averaging_theorem(cc.representative, 1, "complex")
        assert rep.equal
        if rep.r > 0:
            assert rep.matches == ["0<=i<r"]
        counts.append((rep.r, rep.supercodes))
    assert sorted(counts) == [(0, 1), (1, 2), (2, 6), (3, 30)]


def test_averaging_theorem_ternary():
    g = ternary_golay_12()
    ones = (1,) * 12
    rows = [ones] + [r for r in g.generator_matrix()]
    # a codimension-one subcode containing 1
    sub = PrimeFieldCode(3, 12, rows[:5])
    if sub.dim != 5:
        sub = PrimeFieldCode(3, 12, rows[:6])
    assert sub.dim == 5 and sub.is_self_orthogonal()
    rep = verify_averaging_theorem(sub, 1, "odd_p")
    assert rep.r == 1 and rep.supercodes == 2
    assert rep.equal and rep.matches == ["0<=i<r"]


@pytest.mark.parametrize("m", [1, 2])
def test_harmonic(m):
    rep = verify_harmonic(m)
    assert rep.dims == {8: 2, 10: 2}
    assert rep.harmonic_dims == {8: 1, 10: 0}
    assert not rep.f8.laplacian()


def test_f8_genus_one():
    x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    f8 = harmonic_degree8(1)
    expected = x**8 - (x**6 * y**2).scale(28) + (x**4 * y**4).scale(70) - (x**2 * y**6).scale(28) + y**8
    assert same_span([f8], [expected])


def test_harmonic_invariants_of_degree_12():
    hs = harmonic_invariants(2, 12)
    assert hs and all(not h.laplacian() for h in hs)

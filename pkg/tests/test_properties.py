"""Structural invariants checked exhaustively or with hypothesis."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliffordinv.codes import BinaryCode, enumerate_self_dual, enumerate_self_orthogonal, supercodes_index2
from cliffordinv.enumerators import cwe, genus_collapse, mu_m_of_code, subcode_sum
from cliffordinv.exact import Polynomial, poly_rank
from cliffordinv.groups import (
    GroupKind,
    GroupSpec,
    all_quadratic_forms,
    clifford_generators,
    closure_for,
    extraspecial_generators,
    group_closure,
    is_invariant,
    molien_series,
    reynolds_average,
)

REAL = {m: GroupSpec(GroupKind.REAL, m) for m in (1, 2)}


@pytest.mark.parametrize("m", [1, 2])
def test_closure_elements_are_orthogonal(m):
    closure = closure_for(REAL[m])
    for g in closure:
        assert (g.transpose() @ g).is_identity()


def test_complex_closure_is_unitary():
    mats = closure_for(GroupSpec(GroupKind.COMPLEX, 2)).to_complex()
    prod = np.einsum("bji,bjk->bik", mats.conj(), mats)
    assert np.allclose(prod, np.eye(4))


def test_canonical_hash_collisions_imply_equality():
    seen = {}
    for g in closure_for(REAL[2]):
        h = g.canonical_hash()
        if h in seen:
            assert seen[h] == g
        seen[h] = g
    assert len(seen) == 2304


@pytest.mark.parametrize("m", [1, 2])
def test_molien_coefficients_count_self_dual_codes(m):
    series = molien_series(closure_for(REAL[m]), 8)
    assert all(isinstance(c, int) and c >= 0 for c in series)
    for k in range(1, 5):
        if m >= k - 1:
            assert series[2 * k] == len(enumerate_self_dual(2 * k))


@settings(max_examples=15)
@given(st.lists(st.integers(0, 2), min_size=4, max_size=4).filter(lambda e: sum(e) % 2 == 0))
def test_reynolds_is_idempotent(exps):
    gens = clifford_generators(REAL[2])
    avg = reynolds_average(gens, Polynomial.monomial(tuple(exps)))
    assert is_invariant(avg, gens)
    assert reynolds_average(gens, avg) == avg


@pytest.mark.parametrize("m", [1, 2])
def test_quadratic_form_diagonals_normalise_extraspecial(m):
    E = group_closure(extraspecial_generators(m))
    for q in all_quadratic_forms(m):
        d = q.diagonal()
        for e in extraspecial_generators(m):
            assert d @ e @ d in E


def test_self_dual_codes_contain_ones():
    for N in (2, 4, 6, 8, 10):
        for cc in enumerate_self_dual(N):
            assert cc.representative.contains_ones()


@pytest.mark.parametrize("N", [4, 6, 8])
def test_index_two_supercodes(N):
    for cc in enumerate_self_orthogonal(N):
        c = cc.representative
        for s in supercodes_index2(c):
            assert s.is_self_orthogonal()
            assert s.contains_code(c) and s.dim == c.dim + 1


@pytest.mark.parametrize("m", [1, 2])
@pytest.mark.parametrize("N", [2, 4, 6, 8])
def test_subcode_sum(N, m):
    for cc in enumerate_self_orthogonal(N):
        assert subcode_sum(cc.representative, m) == cwe(cc.representative, m)


@pytest.mark.parametrize("N,m", [(4, 1), (6, 2), (8, 3)])
def test_parabolic_invariants_independent(N, m):
    # m >= N/2 - 1: the nonzero mu_m(C) over classes are independent
    polys = [mu_m_of_code(cc.representative, m) for cc in enumerate_self_orthogonal(N)]
    polys = [p for p in polys if p]
    assert poly_rank(polys) == len(polys)


@given(st.integers(0, 7), st.integers(2, 3))
def test_collapse_of_enumerated_codes(which, m):
    classes = enumerate_self_orthogonal(8)
    c = classes[which % len(classes)].representative
    assert genus_collapse(cwe(c, m)) == cwe(c, m - 1).scale(len(c))


def test_collapse_of_a_quadratic():
    x = [Polynomial.variable(4, i) for i in range(4)]
    y = [Polynomial.variable(2, i) for i in range(2)]
    q = sum((v * v for v in x[1:]), x[0] * x[0])
    assert genus_collapse(q) == (y[0] * y[0]).scale(2) + (y[1] * y[1]).scale(2)


@given(st.lists(st.integers(0, 255), min_size=1, max_size=3))
def test_dual_of_dual(rows):
    c = BinaryCode(8, rows)
    assert c.dual().dual() == c

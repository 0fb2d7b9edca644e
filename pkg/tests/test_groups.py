import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliffordinv.errors import BudgetError, UnsupportedError
from cliffordinv.exact import ExactMatrix, Polynomial, embed_sqrt2, monomials, zeta
from cliffordinv.groups import (
    GroupKind,
    GroupSpec,
    clifford_generators,
    closure_for,
    extraspecial_generators,
    generators_for,
    group_closure,
    index_to_vector,
    invariant_space,
    invariant_space_by_projection,
    is_invariant,
    molien_series,
    predicted_order,
    reynolds_average,
    vector_to_index,
)

REAL1 = GroupSpec(GroupKind.REAL, 1)
REAL2 = GroupSpec(GroupKind.REAL, 2)


@pytest.mark.parametrize(
    "kind,m,p,order",
    [
        ("real", 1, 2, 16),
        ("real", 2, 2, 2304),
        ("complex", 1, 2, 192),
        ("extraspecial", 1, 2, 8),
        ("extraspecial", 2, 2, 32),
        ("extraspecial", 3, 2, 128),
        ("extraspecial_p", 1, 3, 27),
        ("parabolic", 2, 2, 384),
        # Z_4 x 3^(1+2).SL(2,3)
        ("odd_p", 1, 3, 4 * 27 * 24),
        # a = gcd(6, 4) = 2 for p = 5
        ("odd_p", 1, 5, 2 * 125 * 120),
    ],
)
def test_closure_orders(kind, m, p, order):
    spec = GroupSpec(GroupKind(kind), m, p)
    assert closure_for(spec).order == order


@pytest.mark.parametrize("spec", [REAL1, REAL2, GroupSpec(GroupKind.COMPLEX, 2)])
def test_order_formula_agrees(spec):
    assert predicted_order(spec) == closure_for(spec).order


@pytest.mark.parametrize("kind", ["real", "complex", "odd_p"])
def test_generators_are_unitary(kind):
    spec = GroupSpec(GroupKind(kind), 2, 3 if kind == "odd_p" else 2)
    for g in clifford_generators(spec):
        assert g.dim == spec.dim
        assert g.is_unitary()


@pytest.mark.parametrize("kind", ["real", "complex"])
def test_generators_normalise_the_extraspecial_group(kind):
    m = 2
    gens = extraspecial_generators(m)
    if kind == "complex":
        # E(m) extended by the scalar i, inside Q(zeta_8)
        gens = [g.map(embed_sqrt2) for g in gens] + [ExactMatrix.identity(2**m).map(lambda x: x * zeta(8) ** 2)]
    E = group_closure(gens)
    for g in clifford_generators(GroupSpec(GroupKind(kind), m)):
        gi = g.inverse()
        for e in gens:
            assert g @ e @ gi in E


def test_unsupported_specs():
    with pytest.raises(UnsupportedError):
        GroupSpec(GroupKind.ODD_PRIME, 1, 4)
    with pytest.raises(UnsupportedError):
        GroupSpec(GroupKind.REAL, 1, 3)
    with pytest.raises(UnsupportedError):
        GroupSpec(GroupKind.REAL, 0)


def test_closure_budget():
    with pytest.raises(BudgetError):
        group_closure(generators_for(REAL2), max_order=100)


@given(st.integers(0, 26), st.integers(1, 3))
def test_index_vector_roundtrip(i, m):
    p = 3
    i %= p**m
    v = index_to_vector(i, m, p)
    assert len(v) == m
    assert vector_to_index(v, p) == i


def test_big_endian_convention():
    assert index_to_vector(1, 2) == (0, 1)
    assert index_to_vector(2, 2) == (1, 0)


def test_molien_real_m1():
    assert molien_series(closure_for(REAL1), 16) == [1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 2, 0, 2, 0, 3]


def test_molien_counts_invariants():
    # the Molien coefficient is the dimension of the invariant space
    series = molien_series(closure_for(REAL2), 10)
    gens = clifford_generators(REAL2)
    for d in (2, 4, 8):
        assert len(invariant_space(gens, d)) == series[d]


@given(st.lists(st.integers(0, 4), min_size=2, max_size=2))
def test_reynolds_orbit_matches_direct_sum(exps):
    closure = closure_for(REAL1)
    p = Polynomial.monomial(tuple(exps))
    avg = reynolds_average(closure, p, method="all")
    assert avg == reynolds_average(clifford_generators(REAL1), p)
    assert is_invariant(avg, clifford_generators(REAL1))


@pytest.mark.parametrize("degree", [2, 4, 6, 8])
def test_invariant_space_two_routes(degree):
    closure = closure_for(REAL1)
    direct = invariant_space_by_projection(closure, degree)
    solved = invariant_space(clifford_generators(REAL1), degree)
    assert direct == solved


def test_invariant_space_is_invariant():
    gens = clifford_generators(REAL2)
    for p in invariant_space(gens, 8):
        assert is_invariant(p, gens)
    assert len(list(monomials(4, 2))) == 10

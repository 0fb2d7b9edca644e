import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliffordinv.errors import NotClaimedError
from cliffordinv.exact import SqrtTwo
from cliffordinv.groups import GroupKind, GroupSpec, closure_for
from cliffordinv.lattices import (
    affine_subspaces,
    balanced_lattice,
    barnes_wall,
    chi_vector,
    design_test,
    e8_check,
    find_design_point,
    harmonic_moments,
    rotation_pi_8,
    stabilizes,
    verify_automorphism_membership,
    verify_rational_part,
    verify_span_maximal_order,
    verify_tensor_decomposition,
)


@pytest.mark.parametrize("m,count", [(1, 2 + 1), (2, 4 + 6 + 1), (3, 8 + 28 + 14 + 1)])
def test_affine_subspace_counts(m, count):
    assert len(affine_subspaces(m)) == count


@given(st.integers(1, 3), st.data())
def test_chi_vector_weight(m, data):
    subs = affine_subspaces(m)
    U = data.draw(st.sampled_from(subs))
    assert sum(chi_vector(U)) == 2 ** U.dim
    assert all(p in U for p in U.points())


@pytest.mark.parametrize(
    "m,det,det_primed,minimum,minimum_primed,kissing",
    [(1, 4, 1, 2, 1, 4), (2, 64, 4, 4, 2, 24), (3, 65536, 256, 8, 4, 240)],
)
def test_barnes_wall_invariants(m, det, det_primed, minimum, minimum_primed, kissing):
    L, P = barnes_wall(m), barnes_wall(m, primed=True)
    assert L.det() == det and P.det() == det_primed
    assert L.minimum() == (minimum, kissing)
    assert P.minimum() == (minimum_primed, kissing)


def test_e8_versions():
    assert e8_check() == (4, True, 8, 240)
    assert e8_check(primed=True) == (2, True, 4, 240)


def test_balanced_gram():
    r = SqrtTwo(0, 1)
    assert balanced_lattice(1).gram == [[2, r], [r, 2]]


@pytest.mark.parametrize("m", [2, 3])
def test_tensor_identity(m):
    assert verify_tensor_decomposition(m)
    assert not verify_tensor_decomposition(m, perturb=True)
    assert verify_rational_part(m)


@pytest.mark.parametrize("m,variant", [(1, "real"), (2, "real"), (3, "real"), (1, "complex"), (2, "complex")])
def test_automorphisms(m, variant):
    assert verify_automorphism_membership(m, variant)


def test_rotation_is_not_an_automorphism():
    assert not stabilizes(rotation_pi_8(), balanced_lattice(1))
    assert not verify_automorphism_membership(1, generators=[rotation_pi_8()])


def test_span_of_the_group():
    assert verify_span_maximal_order(closure_for(GroupSpec(GroupKind.REAL, 2)))
    assert not verify_span_maximal_order(closure_for(GroupSpec(GroupKind.EXTRASPECIAL, 2)))
    with pytest.raises(NotClaimedError):
        verify_span_maximal_order(closure_for(GroupSpec(GroupKind.REAL, 1)))


def test_octagon_is_a_seven_design():
    rep = design_test(closure_for(GroupSpec(GroupKind.REAL, 1)), [1, 0], 9)
    assert rep.size == 16
    assert rep.strength == 7
    assert rep.residuals[8] > 0.5


def test_generic_point_m2():
    rng = np.random.default_rng(1)
    rep = design_test(closure_for(GroupSpec(GroupKind.REAL, 2)), rng.normal(size=4), 12)
    assert rep.strength == 7
    assert rep.residuals[8] > 1e-6


def test_fifteen_design():
    x, err = find_design_point(2)
    assert err < 1e-12
    rep = design_test(closure_for(GroupSpec(GroupKind.REAL, 2)), x, 16)
    assert rep.strength == 15 and rep.size == 2304


def test_moments_exact_and_float_agree():
    closure = closure_for(GroupSpec(GroupKind.REAL, 1))
    point = [1, 0]
    exact = harmonic_moments(closure, point, 8, exact=True)
    approx = harmonic_moments(closure, point, 8)
    assert np.allclose([complex(v) for v in exact[1]], approx[1])
    assert exact[0] > 0.1  # the octagon is not an 8-design

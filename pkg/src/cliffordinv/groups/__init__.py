"""Clifford groups and their relatives as explicit matrix groups."""

from .closure import GroupClosure, PackedField, closure_for, group_closure, pack, unpack
from .generators import (
    GroupKind,
    GroupSpec,
    QuadraticFormF2,
    affine_permutation,
    all_quadratic_forms,
    clifford_generators,
    complex_clifford_generators,
    extraspecial_generators,
    extraspecial_p_generators,
    generators_for,
    index_to_vector,
    odd_prime_clifford_generators,
    parabolic_generators,
    predicted_order,
    real_clifford_generators,
    vector_to_index,
)
from .molien import MolienAccumulator, charpoly_classes, molien_series, molien_series_streaming
from .reynolds import (
    echelon_basis,
    invariant_space,
    invariant_space_by_projection,
    is_invariant,
    polynomial_orbit,
    reynolds_average,
)


def verify_span_maximal_order(closure):
    """Whether the Z-span of the group is the full matrix ring over ``Z[sqrt 2]``.

    Defined in ``cliffordinv.lattices``, which supplies the lattice basis.
    """
    from ..lattices import verify_span_maximal_order as impl

    return impl(closure)


__all__ = [
    "GroupClosure",
    "PackedField",
    "closure_for",
    "group_closure",
    "pack",
    "unpack",
    "GroupKind",
    "GroupSpec",
    "QuadraticFormF2",
    "affine_permutation",
    "all_quadratic_forms",
    "clifford_generators",
    "complex_clifford_generators",
    "extraspecial_generators",
    "extraspecial_p_generators",
    "generators_for",
    "index_to_vector",
    "odd_prime_clifford_generators",
    "parabolic_generators",
    "predicted_order",
    "real_clifford_generators",
    "vector_to_index",
    "MolienAccumulator",
    "charpoly_classes",
    "molien_series",
    "molien_series_streaming",
    "echelon_basis",
    "invariant_space",
    "invariant_space_by_projection",
    "is_invariant",
    "polynomial_orbit",
    "reynolds_average",
    "verify_span_maximal_order",
]

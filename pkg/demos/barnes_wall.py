"""
Barnes-Wall lattices from affine subspaces
==========================================

"""

from cliffordinv.groups import GroupKind, GroupSpec, closure_for
from cliffordinv.lattices import (
    balanced_lattice,
    barnes_wall,
    e8_check,
    verify_automorphism_membership,
    verify_span_maximal_order,
    verify_tensor_decomposition,
)

# L_m is spanned by characteristic vectors of affine subspaces, scaled by dimension
for m in (1, 2, 3):
    L = barnes_wall(m)
    print(L.name, "det", L.det(), "minimum", L.minimum())

# in dimension 8 both versions rescale to E8
print(e8_check(), e8_check(primed=True))

# the balanced lattice M_1 over Z[sqrt2]
M1 = balanced_lattice(1)
print([[str(x) for x in row] for row in M1.gram])

# M_m is the m-th tensor power of M_1
print(verify_tensor_decomposition(2), verify_tensor_decomposition(3))

# the Clifford group preserves M_m, and spans the full matrix ring over Z[sqrt2] for m = 2
print(all(verify_automorphism_membership(m) for m in (1, 2, 3)))
print(verify_span_maximal_order(closure_for(GroupSpec(GroupKind.REAL, 2))))

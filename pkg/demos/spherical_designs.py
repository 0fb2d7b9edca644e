"""
Spherical designs from Clifford orbits
======================================

"""

import numpy as np

from cliffordinv.groups import GroupKind, GroupSpec, closure_for
from cliffordinv.lattices import design_test, find_design_point

C1 = closure_for(GroupSpec(GroupKind.REAL, 1))
C2 = closure_for(GroupSpec(GroupKind.REAL, 2))

# orbit of (1, 0) under C_1: the 8 vertices of a regular octagon, each twice
rep = design_test(C1, [1, 0], 9)
print("octagon strength:", rep.strength, {k: round(v, 12) for k, v in rep.residuals.items()})

# a random point in genus 2 gives a 7-design
rep = design_test(C2, np.random.default_rng(0).normal(size=4), 16)
print("generic strength:", rep.strength)

# a common zero of the harmonic invariants of degrees 8 and 12 gives a 15-design
x, err = find_design_point(2)
print("point:", np.round(x, 6), "residual:", err)
rep = design_test(C2, x, 16)
print("strength:", rep.strength, "size:", rep.size)

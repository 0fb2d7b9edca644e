"""
Invariants spanned by code enumerators
======================================

"""

from cliffordinv.codes import BinaryCode, hamming_code_8
from cliffordinv.enumerators import cwe
from cliffordinv.groups import GroupKind, GroupSpec, clifford_generators, invariant_space
from cliffordinv.invariants import quadratic_form, same_span, verify_averaging_theorem, verify_runge

# degree 8, genus 1: two invariants, q^4 and the Hamming enumerator
space = invariant_space(clifford_generators(GroupSpec(GroupKind.REAL, 1)), 8)
print(len(space), same_span(space, [quadratic_form(2) ** 4, cwe(hamming_code_8(), 1)]))

# three counts agree: fixed space, Molien coefficient, code classes
for N in range(2, 9):
    r = verify_runge(N, 2)
    print(N, r.invariant_dim, r.molien_coefficient, r.code_classes, r.ok)

# averaging cwe(<1^8>) over the group gives a multiple of the sum over its self-dual supercodes;
# both product ranges are evaluated and the exact match decides between them
rep = verify_averaging_theorem(BinaryCode.all_ones(8), 1, "real")
print(rep.supercodes, rep.matches)

# the complex version runs over doubly-even supercodes
rep = verify_averaging_theorem(BinaryCode.all_ones(8), 1, "complex")
print(rep.supercodes, rep.matches)

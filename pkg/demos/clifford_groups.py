"""
Clifford groups and their Molien series
=======================================

"""

from cliffordinv.exact import Polynomial
from cliffordinv.groups import GroupKind, GroupSpec, clifford_generators, closure_for, molien_series, predicted_order

# the real Clifford group of genus 1 is generated by two Pauli matrices and the Hadamard matrix
spec = GroupSpec(GroupKind.REAL, 1)
for g in clifford_generators(spec):
    print(g)

# close the generators under multiplication; the result is dihedral of order 16
C1 = closure_for(spec)
print("order of C_1:", C1.order)

# genus 2 has 2304 elements and agrees with the order formula
C2 = closure_for(GroupSpec(GroupKind.REAL, 2))
print("order of C_2:", C2.order, "predicted:", predicted_order(C2.spec))

# Molien series: the number of independent invariants in each degree
print("Phi_1:", molien_series(C1, 16))
print("Phi_2:", molien_series(C2, 16))

# the two series first differ at degree 12
print("degree 12:", molien_series(C1, 12)[12], "vs", molien_series(C2, 12)[12])

# the complex group adds diag(1, i) and the scalar zeta_8
X1 = closure_for(GroupSpec(GroupKind.COMPLEX, 1))
print("order of X_1:", X1.order, "series:", molien_series(X1, 24))

# the quadratic form x0^2 + x1^2 is the invariant of degree 2
q = Polynomial.variable(2, 0) ** 2 + Polynomial.variable(2, 1) ** 2
print(all(q.act(g) == q for g in clifford_generators(spec)))

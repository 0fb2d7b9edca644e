"""Clifford groups, weight enumerators of self-dual codes and Barnes-Wall lattices.

Everything is computed in exact arithmetic: rationals, Q(sqrt 2) and small
cyclotomic fields.  Subpackages:

``exact``        scalars, matrices, polynomials, power series, integer HNF
``groups``       generators, closure, Molien series, Reynolds averaging
``codes``        binary and prime-field codes, self-dual enumeration
``enumerators``  complete/full weight enumerators, parabolic invariants
``invariants``   Runge spanning, averaging identities, harmonic invariants
``lattices``     Barnes-Wall lattices, automorphism checks, design tests
"""

__version__ = "0.1.0"

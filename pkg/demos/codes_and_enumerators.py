"""
Self-dual codes and their weight enumerators
============================================

"""

from cliffordinv.codes import enumerate_self_dual, hamming_code_8, shadow, shadow_vectors
from cliffordinv.enumerators import cwe, h_m_explicit, hamming_we, variable_names, w_quad

# classes of binary self-dual codes by length
for N in (2, 4, 6, 8, 10):
    print(N, [cc.representative.to_strings() for cc in enumerate_self_dual(N)])

# the extended Hamming code and its genus-2 complete weight enumerator
H8 = hamming_code_8()
print(cwe(H8, 2).to_text(variable_names(2)))

# the same polynomial from the sum over affine subspaces
print(h_m_explicit(2) == cwe(H8, 2))

# shadow of i2^3: a coset of the code
i2_3 = enumerate_self_dual(6)[0].representative
v0, _ = shadow_vectors(i2_3)
print("shadow vector:", i2_3.word_to_string(v0))
print("hwe:", hamming_we(i2_3).to_text(["x", "y"]))
print("shadow:", shadow(i2_3).to_text(["x", "y"]))

# the four-variable refinement collapses back to the weight enumerator
print(w_quad(i2_3, v0).to_text(["x", "y", "z", "w"]))

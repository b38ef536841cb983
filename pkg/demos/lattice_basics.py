"""
Integer matrices, normal forms and cokernels
=============================================

Everything is exact: entries are Python ints, quotients are Fractions.
"""

from toricover import IntMatrix, cokernel_structure, hnf, snf
from toricover import strictly_positive_in_rowspace

# a fan matrix whose columns span a sublattice of index 2
V = IntMatrix([[1, 1, -1, -1],
               [1, -1, 1, -1]])
print(V)

# row Hermite form: U @ V == H, pivots positive, entries above reduced
h = hnf(V)
print(h.H)
assert h.U @ V == h.H
print("pivots", h.pivots)

# Smith form: U @ V @ W == S
s = snf(V)
print("invariant factors", s.diagonal)
assert s.U @ V @ s.W == s.S

# the cokernel Z^4 / (row lattice of V)
print("Z^4 / rows(V) =", cokernel_structure(V))
# and Z^2 / (column lattice of V)
print("Z^2 / cols(V) =", cokernel_structure(V.T, 2))

# Is some vector with strictly positive entries in the row space?
# Either a witness comes back, or a Farkas certificate y >= 0, y != 0, A y = 0.
Q = IntMatrix([[1, 0, 0, 1], [0, 1, 1, 0]])
cert = strictly_positive_in_rowspace(Q)
print("positive vector", cert.witness, "=", cert.coefficients, "* rows")

cert = strictly_positive_in_rowspace(V)
print("V admits one?", cert.feasible, " refutation y =", cert.refutation)

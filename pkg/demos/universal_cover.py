"""
The universal 1-covering and its Cox ring grading
=================================================

A fan whose rays span a proper sublattice has a nontrivial codimension-one
fundamental group.  Lifting the rays to the saturated lattice gives a cover.
"""

from toricover import (
    beta_matrix,
    class_group,
    cover_grading,
    is_homogeneous,
    monomial_degree,
    pi1_codim1,
    universal_cover,
    verify_example,
)
from toricover.fixtures import quadric_example, p1xp1_quotient

fan = p1xp1_quotient()
print("Cl =", class_group(fan.V), "  pi1 =", pi1_codim1(fan.V))

data, cover = universal_cover(fan)
print(data.V_tilde)
print(data.beta)
assert data.beta @ data.V_tilde == fan.V
print("degree", data.degree)

# covering twice does nothing
again, _ = universal_cover(cover)
print("degree of the cover's cover:", again.degree)

# beta solves V = beta @ V_tilde for any pair of fan matrices
print(beta_matrix(fan.V, data.V_tilde))

# A hypersurface Cox ring graded by Z^3 x Z/2
hk = quadric_example()
p = hk.presentation()
print(p.relations[0])
print("deg x1*x8 =", monomial_degree(p, [1, 0, 0, 0, 0, 0, 0, 1]))
print(is_homogeneous(p, p.relations[0]))

# forgetting the torsion part grades the Cox ring of the cover
free = cover_grading(p)
print(is_homogeneous(free, free.relations[0]))

# the full check list for this example
for line in verify_example().lines():
    print(line)

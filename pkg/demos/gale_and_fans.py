"""
Gale duality, fans and irrelevant ideals
========================================
"""

from toricover import (
    classify_fan_matrix,
    classify_weight_matrix,
    fan_from_irrelevant,
    gale_dual,
    irrelevant_ideal,
    irrelevant_locus_codim,
    is_complete,
    k_neighborly_primal,
    validate_fan,
)

# Hirzebruch surface F1: rays (1,0), (0,1), (-1,1), (0,-1)
F1 = validate_fan([[1, 0, -1, 0], [0, 1, 1, -1]],
                  [{1, 2}, {2, 3}, {3, 4}, {1, 4}])
print(F1.V)
print("complete:", is_complete(F1))

# The Gale dual is the saturated kernel; here it is the degree matrix.
Q = gale_dual(F1.V)
print(Q)
assert gale_dual(Q) == gale_dual(gale_dual(F1.V))

# classification of both sides
print(classify_fan_matrix(F1.V))
print(classify_weight_matrix(Q))

# A matrix that fails cotorsion-freeness, with the reason attached
bad = classify_fan_matrix([[1, 1, -1, -1], [1, -1, 1, -1]])
for label, evidence in bad.failed_conditions:
    print(f"  fails ({label}): {evidence}")

# irrelevant ideal: generated by the complements of the maximal cones
I = irrelevant_ideal(F1)
print(I)
print("codim of V(I) =", irrelevant_locus_codim(I))

# back again
assert fan_from_irrelevant(F1.V, I) == F1

# k-neighborly: every k rays span a cone of the fan
for k in range(1, 5):
    print(k, k_neighborly_primal(F1, k))

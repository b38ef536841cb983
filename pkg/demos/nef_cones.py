"""
Nef cones by intersecting cones of weights
==========================================

For each maximal cone sigma, take the cone spanned by the columns of Q
outside sigma.  The Nef cone is the intersection of all of them.
"""

from toricover import gale_dual, k_neighborly_dual, nef_cone
from toricover.fixtures import quadric_example, hirzebruch_f1, p1xp1
from toricover.formats import format_cone

for name, fan in [("F1", hirzebruch_f1()), ("P1 x P1", p1xp1())]:
    Q = gale_dual(fan.V)
    nef = nef_cone(fan, Q)
    print(name)
    print(format_cone(nef))

# The same cones decide neighborliness without touching the fan's cones:
# the fan is k-neighborly iff the Nef cone is in every k-fold complement cone.
hk = quadric_example().fan()
Q = gale_dual(hk.V)
for k in (1, 2, 3):
    print("quadric example, k =", k, k_neighborly_dual(hk, Q, k))

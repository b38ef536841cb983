"""Exact rational polyhedral cones via the double description method.

A :class:`RationalCone` keeps both descriptions in canonical form:

* ``lineality``: HNF basis of the saturated lattice in the lineality space;
* ``generators``: primitive extreme rays, each taken orthogonal to the
  lineality space, sorted;
* ``equations``: HNF basis of the saturated lattice of linear forms that
  vanish on the cone;
* ``facets``: primitive inner normals ``a`` with ``a . x >= 0`` on the cone,
  each taken orthogonal to the equation space, sorted.

Equal cones therefore compare equal field by field.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DimMismatchError, NotGaleDualError
from .exactla import (
    IntMatrix,
    as_int_matrix,
    dot,
    primitive,
    primitive_from_rational,
    saturate_rows,
)


def _double_description(inequalities, dim):
    """Generators of ``{x : a . x >= 0 for a in inequalities}``.

    Returns ``(lineality, rays)`` as lists of integer vectors; rays are the
    extreme rays modulo lineality (not yet canonicalized).
    """
    lineality = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    rays = []  # (vector, frozenset of tight inequality indices)
    for k, a in enumerate(inequalities):
        vals = [dot(a, l) for l in lineality]
        pivot = next((i for i, v in enumerate(vals) if v), None)
        if pivot is not None:
            l0 = lineality[pivot]
            s = vals[pivot]
            if s < 0:
                l0, s = tuple(-x for x in l0), -s
            new_lin = []
            for i, l in enumerate(lineality):
                if i == pivot:
                    continue
                t = vals[i]
                new_lin.append(primitive(tuple(s * x - t * y
                                               for x, y in zip(l, l0))))
            new_rays = []
            for r, z in rays:
                t = dot(a, r)
                r = primitive(tuple(s * x - t * y for x, y in zip(r, l0)))
                new_rays.append((r, z | {k}))
            new_rays.append((primitive(l0), frozenset(range(k))))
            lineality, rays = new_lin, new_rays
            continue

        pos, zero, neg = [], [], []
        for i, (r, z) in enumerate(rays):
            t = dot(a, r)
            if t > 0:
                pos.append((i, r, z, t))
            elif t < 0:
                neg.append((i, r, z, t))
            else:
                zero.append((r, z | {k}))
        new_rays = [(r, z) for _, r, z, _ in pos] + zero
        if pos and neg:
            # combinatorial adjacency: no third ray is tight on the common set
            all_z = [z for _, z in rays]
            for ip, rp, zp, tp in pos:
                for jn, rn, zn, tn in neg:
                    common = zp & zn
                    if any(common <= z for i, z in enumerate(all_z)
                           if i != ip and i != jn):
                        continue
                    v = primitive(tuple(tp * x - tn * y
                                        for x, y in zip(rn, rp)))
                    new_rays.append((v, common | {k}))
        rays = new_rays
    return lineality, [r for r, _ in rays]


def _project_out(vectors, basis):
    """Primitive integer representatives of ``vectors`` orthogonal to the
    span of ``basis``; zero results are dropped, duplicates merged."""
    if not basis:
        out = {primitive(v) for v in vectors if any(v)}
        return sorted(out)
    gram = [[Fraction(dot(b, c)) for c in basis] for b in basis]
    inv = _invert(gram)
    out = set()
    for v in vectors:
        coeffs = [dot(b, v) for b in basis]
        lam = [sum(inv[i][j] * coeffs[j] for j in range(len(basis)))
               for i in range(len(basis))]
        w = [Fraction(x) - sum(lam[i] * basis[i][c] for i in range(len(basis)))
             for c, x in enumerate(v)]
        if any(w):
            out.add(primitive_from_rational(w))
    return sorted(out)


def _invert(m):
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for c in range(n):
        p = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def _lattice_basis(vectors, dim):
    if not vectors:
        return ()
    return tuple(saturate_rows(IntMatrix(vectors, dim)).rows())


@dataclass(frozen=True)
class RationalCone:
    ambient_dim: int
    generators: tuple
    lineality: tuple
    facets: tuple
    equations: tuple

    @property
    def dim(self):
        return self.ambient_dim - len(self.equations)

    @property
    def is_pointed(self):
        return not self.lineality

    @property
    def is_zero(self):
        return not self.generators and not self.lineality

    @property
    def is_full_space(self):
        return len(self.lineality) == self.ambient_dim

    def contains(self, x):
        return contains(self, x)

    def __contains__(self, x):
        return contains(self, x)

    def spanning_vectors(self):
        """Generators plus both signs of each lineality basis vector."""
        out = list(self.generators)
        for l in self.lineality:
            out.append(l)
            out.append(tuple(-t for t in l))
        return out

    def issubset(self, other):
        return all(other.contains(v) for v in self.spanning_vectors())

    def generator_matrix(self):
        return IntMatrix(self.generators, self.ambient_dim)

    def facet_matrix(self):
        return IntMatrix(self.facets, self.ambient_dim)


def _from_hrep(facets, equations, dim):
    ineqs = [tuple(a) for a in facets]
    for e in equations:
        ineqs.append(tuple(e))
        ineqs.append(tuple(-x for x in e))
    lin, rays = _double_description(ineqs, dim)
    lineality = _lattice_basis(lin, dim)
    generators = tuple(_project_out(rays, list(lineality)))
    return generators, lineality


def dd_from_generators(vectors, ambient_dim=None):
    """Both descriptions of the cone spanned by ``vectors``."""
    vectors = [tuple(int(x) for x in v) for v in vectors]
    if ambient_dim is None:
        if not vectors:
            raise ValueError("ambient dimension needed for an empty list")
        ambient_dim = len(vectors[0])
    if ambient_dim < 1:
        raise ValueError("ambient dimension must be at least 1")
    for v in vectors:
        if len(v) != ambient_dim:
            raise DimMismatchError(
                f"generator {v} does not live in dimension {ambient_dim}")
    # the dual cone {a : v . a >= 0} has lineality = equations, rays = facets
    eq_lin, facet_rays = _double_description(vectors, ambient_dim)
    equations = _lattice_basis(eq_lin, ambient_dim)
    facets = tuple(_project_out(facet_rays, list(equations)))
    generators, lineality = _from_hrep(facets, equations, ambient_dim)
    return RationalCone(ambient_dim, generators, lineality, facets, equations)


def dd_from_inequalities(facets, equations=(), ambient_dim=None):
    """Cone ``{x : a . x >= 0 for a in facets, e . x = 0 for e in equations}``
    in canonical form."""
    facets = [tuple(int(x) for x in a) for a in facets]
    equations = [tuple(int(x) for x in e) for e in equations]
    if ambient_dim is None:
        if not facets and not equations:
            raise ValueError("ambient dimension needed without inequalities")
        ambient_dim = len((facets or equations)[0])
    generators, lineality = _from_hrep(facets, equations, ambient_dim)
    return dd_from_generators(
        list(generators) + [t for l in lineality
                            for t in (l, tuple(-x for x in l))],
        ambient_dim)


def contains(cone, x):
    x = tuple(Fraction(t) for t in x)
    if len(x) != cone.ambient_dim:
        raise DimMismatchError(
            f"vector of length {len(x)} vs cone in dimension "
            f"{cone.ambient_dim}")
    return (all(dot(e, x) == 0 for e in cone.equations)
            and all(dot(a, x) >= 0 for a in cone.facets))


def intersect(c1, c2):
    if c1.ambient_dim != c2.ambient_dim:
        raise DimMismatchError("cones live in different dimensions")
    return dd_from_inequalities(c1.facets + c2.facets,
                                c1.equations + c2.equations,
                                c1.ambient_dim)


def whole_space(dim):
    return dd_from_inequalities([], (), dim)


def column_cone(M, indices=None):
    """Cone spanned by the columns of ``M`` with the given 0-based indices."""
    M = as_int_matrix(M)
    if indices is None:
        indices = range(M.ncols)
    cols = [M.column(j) for j in indices]
    return dd_from_generators(cols, M.nrows)


def check_gale_pair(V, Q):
    V, Q = as_int_matrix(V), as_int_matrix(Q)
    if V.ncols != Q.ncols or not (Q @ V.T).is_zero():
        raise NotGaleDualError("Q . V^T is not zero")


def nef_cone(fan, Q):
    """Intersection over maximal cones ``I`` of the cone spanned by the
    columns of ``Q`` outside ``I``.

    The pieces are independent, and the canonical form makes the result
    independent of the order in which they are combined.
    """
    Q = as_int_matrix(Q)
    check_gale_pair(fan.V, Q)
    if Q.nrows == 0:
        raise ValueError("weight matrix has no rows")
    facets, equations = [], []
    for I in fan.sorted_cones():
        piece = column_cone_complement(Q, I)
        facets.extend(piece.facets)
        equations.extend(piece.equations)
    return dd_from_inequalities(facets, equations, Q.nrows)


def column_cone_complement(Q, index_set, m=None):
    """``<Q^I>``: cone of the columns of ``Q`` whose 1-based index is not in
    ``index_set``."""
    Q = as_int_matrix(Q)
    m = Q.ncols if m is None else m
    keep = [j for j in range(m) if (j + 1) not in index_set]
    return dd_from_generators([Q.column(j) for j in keep], Q.nrows)


def k_neighborly_dual(fan, Q, k):
    """Whether Nef lies in ``<Q^J>`` for every k-subset ``J`` of the rays."""
    Q = as_int_matrix(Q)
    m = Q.ncols
    if not 1 <= k <= m:
        raise ValueError(f"k must lie in 1..{m}")
    nef = nef_cone(fan, Q)
    vectors = nef.spanning_vectors()
    for J in combinations(range(1, m + 1), k):
        cone = column_cone_complement(Q, set(J), m)
        if not all(cone.contains(v) for v in vectors):
            return False
    return True

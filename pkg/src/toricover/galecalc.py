"""Gale duality and the F/CF/W-matrix conditions."""

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

from .cones import dd_from_generators
from .errors import RankDeficientError
from .exactla import (
    as_int_matrix,
    hnf_basis,
    in_row_lattice,
    invariant_factors,
    kernel_saturated,
    primitive,
    strictly_positive_in_rowspace,
)


def gale_dual(M):
    """HNF-canonical basis of the saturated integer kernel of ``M``.

    The rows of the result span ``{x : M x = 0}``; it has ``cols - rows``
    rows and satisfies ``gale_dual(M) @ M.T == 0``.
    """
    M = as_int_matrix(M)
    if M.rank() != M.nrows:
        raise RankDeficientError(
            f"matrix has rank {M.rank()} < {M.nrows} rows")
    return kernel_saturated(M)


@dataclass(frozen=True)
class MatrixClassReport:
    kind: str
    is_f: bool = False
    is_cf: bool = False
    is_w: bool = False
    is_reduced: bool = False
    failed_conditions: tuple = field(default=())

    def failed_labels(self):
        return tuple(label for label, _ in self.failed_conditions)

    def as_dict(self):
        d = {"kind": self.kind, "is_reduced": self.is_reduced,
             "failed_conditions": [{"condition": c, "evidence": e}
                                   for c, e in self.failed_conditions]}
        if self.kind == "fan":
            d.update(is_f=self.is_f, is_cf=self.is_cf)
        else:
            d.update(is_w=self.is_w)
        return d


def _cols_str(indices):
    return ", ".join(str(i + 1) for i in indices)


def classify_fan_matrix(V):
    V = as_int_matrix(V)
    n, m = V.shape
    failed = []
    rank = V.rank()
    if rank != n:
        failed.append(("a", f"rank {rank} < {n} rows"))
    if n == 0:
        complete = True
    else:
        cone = dd_from_generators(V.columns(), n)
        complete = cone.is_full_space
    if not complete:
        normal = list(cone.facets[0]) if cone.facets else None
        failed.append(("b", "the columns do not positively span R^"
                       f"{n}; the cone has {len(cone.facets)} facet(s), "
                       f"first inner normal {normal}"))
    cols = V.columns()
    zero = [j for j, c in enumerate(cols) if not any(c)]
    if zero:
        failed.append(("c", f"zero column(s) {_cols_str(zero)}"))
    seen = {}
    for j, c in enumerate(cols):
        if any(c):
            seen.setdefault(primitive(c), []).append(j)
    proportional = [js for js in seen.values() if len(js) > 1]
    if proportional:
        failed.append(("d", "positively proportional columns " + "; ".join(
            _cols_str(js) for js in proportional)))
    is_f = not failed
    factors = invariant_factors(V)
    cotorsion_free = rank == n and all(d == 1 for d in factors)
    if not cotorsion_free:
        index = 1
        for d in factors:
            index *= d
        detail = (f"column lattice has index {index} in Z^{n}"
                  if rank == n else "column lattice is not of full rank")
        failed.append(("e", detail))
    non_reduced = [j for j, c in enumerate(cols) if _content(c) != 1]
    if non_reduced:
        failed.append(("reduced",
                       f"column(s) {_cols_str(non_reduced)} not primitive"))
    return MatrixClassReport(
        "fan", is_f=is_f, is_cf=is_f and cotorsion_free,
        is_reduced=not non_reduced, failed_conditions=tuple(failed))


def _content(vector):
    g = 0
    for x in vector:
        g = gcd(g, x)
    return g


def plane_intersection(basis, i, j):
    """Generators of ``L cap span(e_i, e_j)`` projected onto coordinates
    ``(i, j)`` (0-based), for ``L`` the row lattice of ``basis``.

    ``basis`` must have linearly independent rows.
    """
    others = [k for k in range(basis.ncols) if k not in (i, j)]
    # c with c . basis vanishing off {i, j}: kernel of the restricted transpose
    coeffs = kernel_saturated(basis.take_columns(others).T)
    return [
        (sum(c[k] * basis[k, i] for k in range(basis.nrows)),
         sum(c[k] * basis[k, j] for k in range(basis.nrows)))
        for c in coeffs
    ]


def classify_weight_matrix(Q):
    Q = as_int_matrix(Q)
    r, m = Q.shape
    failed = []
    rank = Q.rank()
    if rank != r:
        failed.append(("a", f"rank {rank} < {r} rows"))
    factors = invariant_factors(Q)
    if any(d != 1 for d in factors):
        index = 1
        for d in factors:
            index *= d
        failed.append(("b", f"row lattice has index {index} in its "
                       "saturation"))
    positivity = strictly_positive_in_rowspace(Q)
    if not positivity.feasible:
        failed.append(("c", "no strictly positive vector in the row "
                       f"lattice; refutation y = {list(positivity.refutation)}"))
    cols = Q.columns()
    zero = [j for j, c in enumerate(cols) if not any(c)]
    if zero:
        failed.append(("d", f"zero column(s) {_cols_str(zero)}"))
    units = [j for j in range(m)
             if in_row_lattice(Q, [int(k == j) for k in range(m)])]
    if units:
        failed.append(("e", "row lattice contains e_" + ", e_".join(
            str(j + 1) for j in units)))
    basis = hnf_basis(Q)
    bad_pairs = []
    for i, j in combinations(range(m), 2):
        gens = plane_intersection(basis, i, j)
        if len(gens) >= 2 or any(a * b < 0 for a, b in gens):
            bad_pairs.append((i, j))
    if bad_pairs:
        failed.append(("f", "opposite-sign vectors supported on "
                       + "; ".join(f"{{{i + 1}, {j + 1}}}"
                                   for i, j in bad_pairs)))
    is_w = not failed
    reduced = False
    if rank == r:
        dual = classify_fan_matrix(gale_dual(Q)) if m > r else None
        reduced = dual is not None and dual.is_f and dual.is_reduced
    if not reduced:
        failed.append(("reduced", "Gale dual is not a reduced F-matrix"))
    return MatrixClassReport("weight", is_w=is_w, is_reduced=reduced,
                             failed_conditions=tuple(failed))


def is_pws_fan_matrix(V):
    report = classify_fan_matrix(V)
    return report.is_cf and report.is_reduced

"""Lattice constructions built on the normal forms: kernels, saturation,
cokernels, rational solving."""

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from ..errors import NoSolutionError, RankDeficientError
from .matrix import IntMatrix, RatMatrix, as_int_matrix
from .normal_forms import hnf, hnf_basis, snf


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """``Z^free_rank + Z/d1 + ... + Z/dk`` with ``d1 | d2 | ... | dk``, all
    ``di >= 2``.

    Despite the name the free rank may be positive; the torsion part is the
    finite piece.
    """

    free_rank: int = 0
    invariant_factors: tuple = ()

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for d in factors:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ValueError(f"{a} does not divide {b}")
        object.__setattr__(self, "invariant_factors", factors)

    @property
    def torsion(self):
        return FiniteAbelianGroup(0, self.invariant_factors)

    @property
    def is_finite(self):
        return self.free_rank == 0

    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.invariant_factors

    @property
    def order(self):
        """Order of the torsion subgroup (the whole group when finite)."""
        return prod(self.invariant_factors)

    def descriptor(self):
        parts = []
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " x ".join(parts) if parts else "0"

    def __str__(self):
        return self.descriptor()

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text == "0":
            return cls()
        free, factors = 0, []
        for part in text.split(" x "):
            part = part.strip()
            if part.startswith("Z^"):
                free = int(part[2:])
            elif part.startswith("Z/"):
                factors.append(int(part[2:]))
            else:
                raise ValueError(f"bad group descriptor component {part!r}")
        return cls(free, tuple(factors))


def cokernel_structure(A, ambient=None):
    """Structure of ``Z^ambient / L_r(A)``."""
    A = as_int_matrix(A)
    if ambient is None:
        ambient = A.ncols
    if A.ncols != ambient:
        raise ValueError(
            f"matrix has {A.ncols} columns, ambient lattice is Z^{ambient}")
    diag = snf(A).diagonal
    nonzero = [d for d in diag if d]
    return FiniteAbelianGroup(ambient - len(nonzero),
                              tuple(d for d in nonzero if d > 1))


def kernel_saturated(A):
    """HNF-canonical basis of ``{x in Z^cols : A x = 0}`` (as rows)."""
    A = as_int_matrix(A)
    n = A.ncols
    res = hnf(A.T)
    r = res.rank
    kernel = IntMatrix(res.U.rows()[r:], n)
    return hnf_basis(kernel)


def saturate_rows(A):
    """HNF-canonical basis of ``(L_r(A) (x) Q) cap Z^cols``.

    With ``B`` a basis of the row lattice and ``S = U B W`` its Smith form,
    ``B = U^-1 [D 0] W^-1``, so the first ``rank`` rows of ``W^-1`` span the
    same rational space and extend to a unimodular matrix.
    """
    A = as_int_matrix(A)
    basis = hnf_basis(A)
    r = basis.nrows
    if r == 0:
        return basis
    res = snf(basis)
    return hnf_basis(IntMatrix(res.W_inv.rows()[:r], A.ncols))


def same_row_lattice(A, B):
    A, B = as_int_matrix(A), as_int_matrix(B)
    return A.ncols == B.ncols and hnf_basis(A) == hnf_basis(B)


def rref(rows, ncols):
    """Reduced row echelon form over Q. Returns (rows, pivot columns)."""
    work = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for j in range(ncols):
        p = next((i for i in range(r, len(work)) if work[i][j] != 0), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        piv = work[r][j]
        work[r] = [x / piv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][j] != 0:
                f = work[i][j]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(j)
        r += 1
        if r == len(work):
            break
    return work, pivots


def solve_rational(A, B):
    """Exact ``X`` with ``X @ A == B``.

    ``A`` must have full row rank, which makes the solution unique.
    """
    A, B = as_int_matrix(A), as_int_matrix(B)
    r, n = A.shape
    if B.ncols != n:
        raise ValueError("A and B must have the same number of columns")
    if A.rank() != r:
        raise RankDeficientError(f"A has rank {A.rank()} < {r} rows")
    # A^T X^T = B^T: augment A^T (n x r) with B^T (n x k).
    k = B.nrows
    At, Bt = A.T, B.T
    aug = [list(At[i]) + list(Bt[i]) for i in range(n)]
    red, pivots = rref(aug, r + k)
    if any(p >= r for p in pivots):
        raise NoSolutionError("B is not in the rational row space of A")
    # full column rank of A^T: pivots are exactly 0..r-1
    Xt = [red[i][r:] for i in range(r)]
    return RatMatrix([[Xt[i][j] for i in range(r)] for j in range(k)], r)

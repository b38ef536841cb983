"""Class groups, codimension-1 fundamental groups and universal 1-coverings
of toric varieties given by a fan matrix."""

from dataclasses import dataclass

from .errors import NoSolutionError, NotIntegerError, RankDeficientError
from .exactla import (
    FiniteAbelianGroup,
    IntMatrix,
    as_int_matrix,
    cokernel_structure,
    solve_rational,
)
from .fan import Fan, is_complete, validate_fan
from .galecalc import gale_dual


def _require_full_row_rank(V):
    if V.rank() != V.nrows:
        raise RankDeficientError(
            f"fan matrix has rank {V.rank()} < {V.nrows}: the variety "
            "has torus factors")


def class_group(V):
    """``Z^m / L_r(V)``: the class group of the variety with fan matrix V."""
    V = as_int_matrix(V)
    _require_full_row_rank(V)
    return cokernel_structure(V, V.ncols)


def pi1_codim1(V):
    """``Z^n / L_c(V)``: quotient of N by the sublattice spanned by the rays."""
    V = as_int_matrix(V)
    _require_full_row_rank(V)
    return cokernel_structure(V.T, V.nrows)


def beta_matrix(V, W):
    """The integer matrix ``beta`` with ``V == beta @ W``."""
    V, W = as_int_matrix(V), as_int_matrix(W)
    if V.shape != W.shape:
        raise ValueError(f"shapes differ: {V.shape} vs {W.shape}")
    _require_full_row_rank(V)
    _require_full_row_rank(W)
    beta = solve_rational(W, V)
    if not beta.is_integral():
        raise NotIntegerError(
            f"V = beta W forces the non-integral beta {beta.tolist()}")
    beta = beta.to_int()
    if beta @ W != V:
        raise NoSolutionError("V is not a left multiple of W")
    return beta


@dataclass(frozen=True)
class CoveringData:
    V: IntMatrix
    V_tilde: IntMatrix
    beta: IntMatrix
    pi1: FiniteAbelianGroup
    degree: int
    cone_index_map: tuple = ()


def covering_degree(c):
    return c.degree


def universal_cover(fan):
    """Universal 1-covering of the toric variety of ``fan``.

    Returns the covering data and the covering fan, which has the same
    maximal-cone index sets over the double Gale dual of ``V``.
    """
    if not isinstance(fan, Fan):
        raise TypeError("universal_cover expects a validated Fan")
    V = fan.V
    _require_full_row_rank(V)
    V_tilde = gale_dual(gale_dual(V))
    cover = validate_fan(V_tilde, fan.max_cones)
    beta = beta_matrix(V, V_tilde)
    pi1 = pi1_codim1(V)
    degree = abs(beta.det())
    assert degree == pi1.order, "covering degree differs from |pi1|"
    assert is_complete(cover) == is_complete(fan)
    index_map = tuple((i, i) for i in range(1, fan.m + 1))
    return CoveringData(V, V_tilde, beta, pi1, degree, index_map), cover

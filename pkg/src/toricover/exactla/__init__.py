"""Exact integer and rational linear algebra."""

from .feasibility import (
    PositivityCertificate,
    check_refutation,
    strictly_positive_in_rowspace,
)
from .lattice import (
    FiniteAbelianGroup,
    cokernel_structure,
    kernel_saturated,
    rref,
    same_row_lattice,
    saturate_rows,
    solve_rational,
)
from .matrix import (
    IntMatrix,
    RatMatrix,
    as_int_matrix,
    dot,
    primitive,
    primitive_from_rational,
)
from .normal_forms import (
    HnfResult,
    SnfResult,
    hnf,
    hnf_basis,
    in_row_lattice,
    invariant_factors,
    snf,
    xgcd,
)

__all__ = [
    "FiniteAbelianGroup", "HnfResult", "IntMatrix", "PositivityCertificate",
    "RatMatrix", "SnfResult", "as_int_matrix", "check_refutation",
    "cokernel_structure", "dot", "hnf", "hnf_basis", "in_row_lattice",
    "invariant_factors", "kernel_saturated", "primitive",
    "primitive_from_rational", "rref", "same_row_lattice", "saturate_rows",
    "snf", "solve_rational", "strictly_positive_in_rowspace", "xgcd",
]

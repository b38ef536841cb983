"""Exact fan-matrix calculus for toric varieties and their 1-coverings."""

from .cones import (
    RationalCone,
    column_cone,
    contains,
    dd_from_generators,
    dd_from_inequalities,
    intersect,
    k_neighborly_dual,
    nef_cone,
)
from .covering import (
    CoveringData,
    beta_matrix,
    class_group,
    covering_degree,
    pi1_codim1,
    universal_cover,
)
from .exactla import (
    FiniteAbelianGroup,
    IntMatrix,
    RatMatrix,
    cokernel_structure,
    hnf,
    snf,
    strictly_positive_in_rowspace,
)
from .fan import (
    Fan,
    SquarefreeMonomialIdeal,
    fan_from_irrelevant,
    irrelevant_ideal,
    irrelevant_locus_codim,
    is_complete,
    k_neighborly_primal,
    validate_fan,
)
from .galecalc import classify_fan_matrix, classify_weight_matrix, gale_dual
from .grading import (
    GradedPresentation,
    MultiDegree,
    Polynomial,
    TorsionMatrix,
    cover_grading,
    is_homogeneous,
    monomial_degree,
    parse_polynomial,
)
from .formats import parse_matrix
from .verify import verify_example

__version__ = "0.1.0"

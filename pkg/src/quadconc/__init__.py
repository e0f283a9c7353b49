"""Exact rational-arithmetic verification of cevian concurrences in quadrilaterals.

Construct the full named-point configuration of a quadrilateral with one
point on each side, then check every concurrence, collinearity and
division-ratio identity it satisfies, exactly over the rationals.
"""

from ._backend import active as kernel_backend  # noqa: F401
from .configuration import (  # noqa: F401
    Configuration,
    Quadrilateral,
    SideRatios,
    build_from_points,
    build_from_ratios,
    build_from_two_points,
    cyclic_relabel,
)
from .generators import GenSpec, gen_quadrilateral, gen_ratios  # noqa: F401
from .kernel import (  # noqa: F401
    Line,
    Point,
    Rat,
    affine_parameter,
    as_rat,
    classify_quadrilateral,
    collinear,
    concurrent,
    directed_ratio,
    line_through,
    meet,
    orientation,
    point_dividing,
)
from .verifiers import (  # noqa: F401
    CLAIM_IDS,
    Verdict,
    overall_status,
    verify_all,
    verify_crossing_ratio_formula,
    verify_crossing_ratios,
    verify_diagonal_collinearity,
    verify_diagonal_concurrence_iff,
    verify_general_concurrences,
    verify_inner_quad_convexity,
    verify_inner_quadrilateral,
    verify_ratio_product,
    verify_remarks,
    verify_section_ratios,
    verify_seven_lines,
)

__version__ = "0.1.0"

"""Alternating sign matrices, their weighted projections, and related objects."""

from .ashm import Ashm, ashl, grid_notation, parse_grid, validate_ashm
from .bijection import (
    asm_from_monotone,
    asm_from_partial_sum,
    matrix01_from_triangle,
    monotone_from_asm,
    partial_sum,
    triangle_from_01,
)
from .core import (
    Asm,
    IntMatrix,
    MonotoneTriangle,
    PartialSumMatrix,
    RowIncreasingTriangle,
    entry_multiset,
    validate_asm,
    validate_monotone,
    validate_row_increasing,
    weighted_projection,
)
from .galeryser import conjugate, construct_01_matrix, gale_ryser_feasible, majorized_by
from .monotonize import find_inverted_trapezoids, monotonize, potential_f, switch_trapezoid
from .polytope import (
    PolytopeMatrix,
    RationalMatrix,
    TBlock,
    TBlockTerm,
    apply_terms,
    decompose_paired,
    decompose_tblocks,
    tblock_matrix,
    validate_polytope,
)
from .synthesis import asm_with_projection, construct, verify_projection_set

__version__ = "0.1.0"

"""Tools for bounding how much binary images with given projections can differ."""

from .bounds import (
    BoundCheck,
    BoundReport,
    analyze_pair,
    baseline_rowwise,
    bound_equal_linesums,
    bound_general,
    bound_two_unique,
    bound_unique_vs_any,
    disjoint_size_bound,
    ratio_same_linesums,
    ratio_vs_neighbour,
)
from .errors import (
    BadPermutation,
    CapExceeded,
    InconsistentSums,
    Infeasible,
    NotSorted,
    NotUnique,
    RowExceedsWidth,
    TomographyError,
)
from .families import example_one, example_three, example_two
from .grid import (
    EMPTY_GRID,
    GridPoint,
    GridSet,
    LineSums,
    alpha,
    bounding_box,
    conjugate,
    intersect,
    line_sums,
    line_sums_in_box,
    normalize,
    sorted_alpha,
    symm_diff,
)
from .neighbour import (
    AxisConditions,
    NeighbourSummary,
    check_condition_cols,
    check_condition_rows,
    neighbour,
    neighbour_set,
    no_forced_ones_condition,
)
from .oracle import (
    DEFAULT_CAP,
    enumerate_realizations,
    extremal_pair,
    forced_ones,
    min_alpha_unique_bruteforce,
)
from .ryser import is_consistent, is_unique, reconstruct, unique_set
from .staircase import Membership, Staircase, decompose, row_gap_floor, validate

__all__ = [
    "AxisConditions",
    "BadPermutation",
    "BoundCheck",
    "BoundReport",
    "CapExceeded",
    "DEFAULT_CAP",
    "EMPTY_GRID",
    "GridPoint",
    "GridSet",
    "InconsistentSums",
    "Infeasible",
    "LineSums",
    "Membership",
    "NeighbourSummary",
    "NotSorted",
    "NotUnique",
    "RowExceedsWidth",
    "Staircase",
    "TomographyError",
    "alpha",
    "analyze_pair",
    "baseline_rowwise",
    "bound_equal_linesums",
    "bound_general",
    "bound_two_unique",
    "bound_unique_vs_any",
    "bounding_box",
    "check_condition_cols",
    "check_condition_rows",
    "conjugate",
    "decompose",
    "disjoint_size_bound",
    "enumerate_realizations",
    "example_one",
    "example_three",
    "example_two",
    "extremal_pair",
    "forced_ones",
    "intersect",
    "is_consistent",
    "is_unique",
    "line_sums",
    "line_sums_in_box",
    "min_alpha_unique_bruteforce",
    "neighbour",
    "neighbour_set",
    "no_forced_ones_condition",
    "normalize",
    "ratio_same_linesums",
    "ratio_vs_neighbour",
    "reconstruct",
    "row_gap_floor",
    "sorted_alpha",
    "symm_diff",
    "unique_set",
    "validate",
]

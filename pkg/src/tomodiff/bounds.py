"""Closed-form difference and intersection bounds, plus pair reports."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import RowExceedsWidth
from .grid import (
    GridPoint,
    GridSet,
    LineSums,
    alpha,
    intersect,
    line_sums_in_box,
    symm_diff,
)
from .neighbour import neighbour
from .ryser import unique_set

# Bounds are exact reals up to floating point; satisfaction compares the
# integer actual against bound + EVAL_TOL so boundary equality never
# fails spuriously.
EVAL_TOL = 1e-9


def baseline_rowwise(sums: LineSums, n_cols: int) -> int:
    """Simple per-row cap on the difference of two images with these row sums.

    Each row of sum a inside a width-n frame can differ from another
    realization in at most 2 * min(a, n - a) cells, so the rows add up
    to an upper bound that ignores the column sums entirely. It is easy
    to compute but usually far from tight.
    """
    for r in sums.rows:
        if r > n_cols:
            raise RowExceedsWidth(f"row sum {r} exceeds width {n_cols}")
    return sum(2 * min(r, n_cols - r) for r in sums.rows)


def bound_unique_vs_any(alpha_value: int, size: int, weak: bool = False) -> float:
    """Cap on the difference between a uniquely determined image and any image.

    Evaluates alpha * sqrt(8 * size + 1) - alpha, or the weaker but
    simpler 2 * alpha * sqrt(2 * size) when weak is set.
    """
    if weak:
        return 2.0 * alpha_value * math.sqrt(2.0 * size)
    return alpha_value * (math.sqrt(8.0 * size + 1.0) - 1.0)


def bound_equal_linesums(alpha_value: int, size: int) -> float:
    """Cap on the difference of two images sharing their line sums."""
    return 2.0 * alpha_value * (math.sqrt(8.0 * size + 1.0) - 1.0)


def ratio_vs_neighbour(alpha_value: int, size: int) -> float:
    """Floor on the fraction of an image covered by its neighbour."""
    if size < 1:
        raise ValueError("size must be positive")
    return 1.0 - math.sqrt(2.0) * alpha_value / math.sqrt(size)


def ratio_same_linesums(alpha_value: int, size: int) -> float:
    """Floor on the overlap fraction of two images sharing their line sums."""
    if size < 1:
        raise ValueError("size must be positive")
    return 1.0 - 2.0 * math.sqrt(2.0) * alpha_value / math.sqrt(size)


def disjoint_size_bound(alpha_value: int) -> int:
    """Largest size a pair of disjoint images with equal line sums can have."""
    return 8 * alpha_value * alpha_value


def bound_two_unique(alpha1: int) -> float:
    """Cap on the difference of two uniquely determined images.

    Depends only on their projection distance, not on their sizes.
    """
    return 2.0 * alpha1 * math.sqrt(2.0 * alpha1 + 1.0) - alpha1


def bound_general(
    alpha1: int, alpha2: int, alpha3: int, size2: int, size3: int
) -> float:
    """Cap on the difference of two arbitrary images via their neighbours.

    Sums the unique-vs-any caps for each image against its neighbour and
    the two-unique cap between the neighbours themselves.
    """
    return (
        bound_unique_vs_any(alpha2, size2)
        + bound_unique_vs_any(alpha3, size3)
        + bound_two_unique(alpha1)
    )


@dataclass(frozen=True)
class BoundCheck:
    """One evaluated bound: its value, applicability, and outcome."""

    name: str
    value: float
    applicable: bool
    satisfied: bool | None
    slack: float | None


@dataclass(frozen=True)
class BoundReport:
    """Every bound evaluated for a pair of images in a shared frame."""

    alpha_f2: int
    alpha_f3: int
    alpha_unique_pair: int
    actual_symm_diff: int
    actual_intersection: int
    size_f2: int
    size_f3: int
    line_sums_equal: bool
    bounds: tuple[BoundCheck, ...]


def _shift_to_positive(first: GridSet, second: GridSet) -> tuple[GridSet, GridSet]:
    points = list(first.points) + list(second.points)
    if not points:
        return first, second
    dr = min(p.row for p in points) - 1
    dc = min(p.col for p in points) - 1
    if dr == 0 and dc == 0:
        return first, second

    def shift(image: GridSet) -> GridSet:
        return GridSet(
            frozenset(GridPoint(p.row - dr, p.col - dc) for p in image.points)
        )

    return shift(first), shift(second)


def analyze_pair(first: GridSet, second: GridSet) -> BoundReport:
    """Evaluate every applicable bound for a pair of images.

    Both images are projected in their joint frame, translated together
    when needed, so distances are position-faithful. Bounds tied to
    equal line sums are marked inapplicable when the projections differ;
    the disjointness bound additionally requires an empty intersection.
    """
    first, second = _shift_to_positive(first, second)
    points = list(first.points) + list(second.points)
    n_rows = max((p.row for p in points), default=0)
    n_cols = max((p.col for p in points), default=0)
    sums_first = line_sums_in_box(first, n_rows, n_cols)
    sums_second = line_sums_in_box(second, n_rows, n_cols)

    nb_first = neighbour(sums_first)
    nb_second = neighbour(sums_second)
    set_nb_first = unique_set(sums_first.rows, nb_first.sigma)
    set_nb_second = unique_set(sums_second.rows, nb_second.sigma)

    a2 = nb_first.alpha0
    a3 = nb_second.alpha0
    a1 = alpha(nb_first.neighbour_sums, nb_second.neighbour_sums)
    size2 = len(first)
    size3 = len(second)
    diff = len(symm_diff(first, second))
    inter = len(intersect(first, second))
    equal_sums = sums_first == sums_second

    checks: list[BoundCheck] = []

    def add_diff(name: str, value: float, actual: int, applicable: bool = True) -> None:
        if applicable:
            ok = actual <= value + EVAL_TOL
            checks.append(BoundCheck(name, value, True, ok, value - actual))
        else:
            checks.append(BoundCheck(name, value, False, None, None))

    def add_ratio(name: str, value: float, actual: float, applicable: bool = True) -> None:
        if applicable:
            ok = actual >= value - EVAL_TOL
            checks.append(BoundCheck(name, value, True, ok, actual - value))
        else:
            checks.append(BoundCheck(name, value, False, None, None))

    add_diff(
        "rowwise_baseline",
        float(baseline_rowwise(sums_first, n_cols)),
        diff,
        applicable=equal_sums,
    )
    add_diff(
        "diff_first_vs_neighbour",
        bound_unique_vs_any(a2, size2),
        len(symm_diff(set_nb_first, first)),
    )
    add_diff(
        "diff_first_vs_neighbour_weak",
        bound_unique_vs_any(a2, size2, weak=True),
        len(symm_diff(set_nb_first, first)),
    )
    add_ratio(
        "ratio_first_vs_neighbour",
        ratio_vs_neighbour(a2, size2) if size2 else 1.0,
        len(intersect(set_nb_first, first)) / size2 if size2 else 0.0,
        applicable=size2 > 0,
    )
    add_diff(
        "diff_second_vs_neighbour",
        bound_unique_vs_any(a3, size3),
        len(symm_diff(set_nb_second, second)),
    )
    add_diff(
        "diff_second_vs_neighbour_weak",
        bound_unique_vs_any(a3, size3, weak=True),
        len(symm_diff(set_nb_second, second)),
    )
    add_ratio(
        "ratio_second_vs_neighbour",
        ratio_vs_neighbour(a3, size3) if size3 else 1.0,
        len(intersect(set_nb_second, second)) / size3 if size3 else 0.0,
        applicable=size3 > 0,
    )
    add_diff(
        "diff_neighbour_pair",
        bound_two_unique(a1),
        len(symm_diff(set_nb_first, set_nb_second)),
    )
    add_diff("diff_pair_general", bound_general(a1, a2, a3, size2, size3), diff)
    add_diff(
        "diff_pair_equal_sums",
        bound_equal_linesums(a2, size2),
        diff,
        applicable=equal_sums,
    )
    add_ratio(
        "ratio_pair_equal_sums",
        ratio_same_linesums(a2, size2) if size2 else 1.0,
        inter / size2 if size2 else 0.0,
        applicable=equal_sums and size2 > 0,
    )
    add_diff(
        "disjoint_size",
        float(disjoint_size_bound(a2)),
        size2,
        applicable=equal_sums and inter == 0,
    )

    return BoundReport(
        alpha_f2=a2,
        alpha_f3=a3,
        alpha_unique_pair=a1,
        actual_symm_diff=diff,
        actual_intersection=inter,
        size_f2=size2,
        size_f3=size3,
        line_sums_equal=equal_sums,
        bounds=tuple(checks),
    )

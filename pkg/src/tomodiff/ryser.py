"""Feasibility, canonical reconstruction, and uniqueness of projections."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import BadPermutation, Infeasible, RowExceedsWidth
from .grid import GridPoint, GridSet, LineSums, conjugate


def _sorted_desc(values: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(values, reverse=True))


def is_consistent(sums: LineSums) -> bool:
    """Whether any binary image realizes the given row and column sums.

    Checks equal totals plus cumulative dominance of the sorted row sums
    by the conjugate of the sorted column sums.
    """
    if not sums.is_balanced():
        return False
    rows = _sorted_desc(sums.rows)
    dominator = conjugate(_sorted_desc(sums.cols))
    cum_rows = 0
    cum_dom = 0
    for k in range(max(len(rows), len(dominator))):
        cum_rows += rows[k] if k < len(rows) else 0
        cum_dom += dominator[k] if k < len(dominator) else 0
        if cum_rows > cum_dom:
            return False
    return True


def reconstruct(sums: LineSums) -> GridSet:
    """Build the canonical realization of feasible line sums.

    Rows are filled in decreasing row-sum order (ties to the lower row
    index) into the columns with the largest remaining demand (ties to
    the lower column index). The tie-breaking pins a unique output for
    every input, so results are reproducible across platforms.
    """
    if not is_consistent(sums):
        raise Infeasible(f"no image has row sums {sums.rows} and column sums {sums.cols}")
    remaining = list(sums.cols)
    points: list[GridPoint] = []
    for i in sorted(range(len(sums.rows)), key=lambda i: (-sums.rows[i], i)):
        need = sums.rows[i]
        if need == 0:
            continue
        targets = sorted(range(len(remaining)), key=lambda j: (-remaining[j], j))[:need]
        for j in targets:
            remaining[j] -= 1
            points.append(GridPoint(i + 1, j + 1))
    assert all(v == 0 for v in remaining), "greedy fill must exhaust consistent demands"
    return GridSet(frozenset(points))


def is_unique(sums: LineSums) -> bool:
    """Whether the line sums admit exactly one realization.

    Holds iff the sorted non-zero column sums equal the conjugate of the
    sorted row sums, so no enumeration is needed and the test runs at
    any scale. Raises Infeasible when no realization exists at all.
    """
    if not is_consistent(sums):
        raise Infeasible(f"no image has row sums {sums.rows} and column sums {sums.cols}")
    nonzero_cols = _sorted_desc(v for v in sums.cols if v)
    return nonzero_cols == conjugate(_sorted_desc(sums.rows))


def unique_set(rows: Sequence[int], col_order: Sequence[int]) -> GridSet:
    """Build the uniquely determined image with the given row sums.

    The column sums are the conjugate of the sorted row sums, assigned
    to columns through col_order: column col_order[k - 1] receives the
    k-th largest sum, and columns beyond the conjugate's length get
    zero. Membership follows the counting rule: (i, j) is a point iff
    rows[i - 1] >= #{l : v_l >= v_j}, where v is the assigned column
    sum vector.
    """
    row_sums = tuple(int(r) for r in rows)
    order = tuple(int(j) for j in col_order)
    n = len(order)
    if sorted(order) != list(range(1, n + 1)):
        raise BadPermutation(f"col_order must be a bijection on 1..{n}")
    if row_sums and max(row_sums) > n:
        raise RowExceedsWidth(f"row sum {max(row_sums)} exceeds {n} columns")
    parts = conjugate(_sorted_desc(row_sums))
    v = [0] * n
    for k, col in enumerate(order):
        if k < len(parts):
            v[col - 1] = parts[k]
    rank = [sum(1 for w in v if w >= v[j]) for j in range(n)]
    points = [
        GridPoint(i, j + 1)
        for i, r in enumerate(row_sums, start=1)
        for j in range(n)
        if r >= rank[j]
    ]
    return GridSet(frozenset(points))

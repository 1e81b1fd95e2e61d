"""Closest uniquely determined projections and forced-point conditions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import Infeasible, NotSorted
from .grid import GridSet, LineSums, alpha, conjugate
from .ryser import is_consistent, unique_set


@dataclass(frozen=True)
class NeighbourSummary:
    """The uniquely determined projections closest to a given image's.

    sigma maps rank to column: sigma[k - 1] is the column that holds the
    k-th largest neighbour column sum. Row sums are kept verbatim, so
    alpha0 is realized entirely in the column sums.
    """

    sigma: tuple[int, ...]
    neighbour_sums: LineSums
    alpha0: int


def neighbour(sums: LineSums) -> NeighbourSummary:
    """Compute the neighbour summary for feasible line sums.

    Columns are ranked by their sums, descending, with ties keeping the
    original order; the conjugate of the sorted row sums is assigned
    along that ranking. The result always passes is_unique, and alpha0
    is the least distance any uniquely determined image can have from
    the input. When the column sums carry ties, other rankings exist,
    but they all give the same alpha0.
    """
    if not is_consistent(sums):
        raise Infeasible(f"no image has row sums {sums.rows} and column sums {sums.cols}")
    n = len(sums.cols)
    sigma = tuple(sorted(range(1, n + 1), key=lambda j: (-sums.cols[j - 1], j)))
    parts = conjugate(tuple(sorted(sums.rows, reverse=True)))
    v = [0] * n
    for k, col in enumerate(sigma):
        if k < len(parts):
            v[col - 1] = parts[k]
    neighbour_sums = LineSums(sums.rows, tuple(v))
    return NeighbourSummary(sigma, neighbour_sums, alpha(sums, neighbour_sums))


def neighbour_set(sums: LineSums) -> GridSet:
    """Materialize a neighbour as an actual image in the input's frame."""
    summary = neighbour(sums)
    return unique_set(sums.rows, summary.sigma)


def _require_non_increasing(seq: Sequence[int], label: str) -> tuple[int, ...]:
    values = tuple(int(v) for v in seq)
    if any(b > a for a, b in zip(values, values[1:])):
        raise NotSorted(f"{label} must be non-increasing")
    return values


def check_condition_cols(sums: LineSums, v: Sequence[int]) -> bool:
    """Test the column-sum sandwich satisfied exactly by closest candidates.

    With a the conjugate of the row sums, requires
    min(a_j, c_j) <= v_j <= max(a_j, c_j) for every stored column index
    and v_j = 0 beyond. The input sums and v must be non-increasing.
    """
    rows = _require_non_increasing(sums.rows, "row sums")
    cols = _require_non_increasing(sums.cols, "column sums")
    candidate = _require_non_increasing(v, "candidate column sums")
    a = conjugate(rows)
    n = len(cols)
    for j in range(max(n, len(candidate))):
        vj = candidate[j] if j < len(candidate) else 0
        if j >= n:
            if vj != 0:
                return False
            continue
        aj = a[j] if j < len(a) else 0
        cj = cols[j]
        if not (min(aj, cj) <= vj <= max(aj, cj)):
            return False
    return True


def check_condition_rows(sums: LineSums, u: Sequence[int]) -> bool:
    """Row-sum analogue of check_condition_cols, via the transpose."""
    return check_condition_cols(sums.transposed(), u)


class AxisConditions(NamedTuple):
    """Strict prefix-dominance flags for the two projection axes."""

    col_axis: bool
    row_axis: bool


def _strictly_dominates_prefixes(upper: Sequence[int], reference: Sequence[int]) -> bool:
    n = len(reference)
    if n == 0:
        return True
    if n == 1:
        # A single non-empty line is fully determined, hence fully forced;
        # the vacuous "all proper prefixes" reading would wrongly pass it.
        return False
    cum_upper = 0
    cum_ref = 0
    for l in range(n - 1):
        cum_upper += upper[l] if l < len(upper) else 0
        cum_ref += reference[l]
        if cum_upper <= cum_ref:
            return False
    return True


def no_forced_ones_condition(sums: LineSums) -> AxisConditions:
    """Evaluate, per axis, the strict condition under which no point is forced.

    The column axis holds when every proper prefix of the sorted
    neighbour column sums strictly exceeds the matching prefix of the
    sorted input column sums; the row axis is the transposed check.
    Only the conjunction of both axes is a safe certificate that the
    intersection of all realizations is empty: a single axis can hold
    while forced points exist (rows (2,1,1) with cols (2,2) passes the
    column axis yet forces two points). Both flags are reported so
    consumers can pick the contract they need.
    """
    if not is_consistent(sums):
        raise Infeasible(f"no image has row sums {sums.rows} and column sums {sums.cols}")
    rows = tuple(sorted((v for v in sums.rows if v), reverse=True))
    cols = tuple(sorted((v for v in sums.cols if v), reverse=True))
    return AxisConditions(
        col_axis=_strictly_dominates_prefixes(conjugate(rows), cols),
        row_axis=_strictly_dominates_prefixes(conjugate(cols), rows),
    )

"""Staircase decomposition of symmetric differences."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from enum import Enum
from itertools import pairwise
from typing import Callable

from .errors import NotUnique
from .grid import GridPoint, GridSet, line_sums
from .ryser import is_unique


class Membership(Enum):
    """Which side of the comparison exclusively owns a staircase point."""

    FIRST_ONLY = "first_only"
    SECOND_ONLY = "second_only"


@dataclass(frozen=True)
class Staircase:
    """An alternating chain of points from a symmetric difference.

    Tags alternate along the chain, and consecutive points share a row
    or a column, with the shared axis alternating as well. A single
    point is a valid degenerate chain.
    """

    points: tuple[GridPoint, ...]
    tags: tuple[Membership, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "points", tuple(GridPoint(int(r), int(c)) for r, c in self.points)
        )
        object.__setattr__(self, "tags", tuple(self.tags))
        if len(self.points) != len(self.tags):
            raise ValueError("points and tags must have equal length")

    def __len__(self) -> int:
        return len(self.points)


def _pair_links(
    tag_of: dict[GridPoint, Membership],
    axis_key: Callable[[GridPoint], int],
    order_key: Callable[[GridPoint], int],
) -> dict[GridPoint, GridPoint]:
    groups: dict[int, tuple[list[GridPoint], list[GridPoint]]] = defaultdict(
        lambda: ([], [])
    )
    for p in sorted(tag_of, key=lambda p: (axis_key(p), order_key(p))):
        side = 0 if tag_of[p] is Membership.FIRST_ONLY else 1
        groups[axis_key(p)][side].append(p)
    link: dict[GridPoint, GridPoint] = {}
    for firsts, seconds in groups.values():
        for a, b in zip(firsts, seconds):
            link[a] = b
            link[b] = a
    return link


def _walk(
    start: GridPoint,
    row_link: dict[GridPoint, GridPoint],
    col_link: dict[GridPoint, GridPoint],
) -> list[GridPoint]:
    points = [start]
    use_row = start in row_link
    if not use_row and start not in col_link:
        return points
    current = start
    while True:
        current = row_link[current] if use_row else col_link[current]
        points.append(current)
        use_row = not use_row
        if (use_row and current not in row_link) or (
            not use_row and current not in col_link
        ):
            return points


def _oriented(
    points: list[GridPoint],
    tag_of: dict[GridPoint, Membership],
    first_row_sums: Counter,
) -> list[GridPoint]:
    exclusive_first = [
        first_row_sums[p.row] for p in points if tag_of[p] is Membership.FIRST_ONLY
    ]
    if len(exclusive_first) >= 2:
        if exclusive_first[0] < exclusive_first[-1]:
            return points[::-1]
        return points
    if points[-1] < points[0]:
        return points[::-1]
    return points


def decompose(first: GridSet, second: GridSet) -> list[Staircase]:
    """Split the symmetric difference of two images into staircases.

    Requires the first image to be uniquely determined by its line sums.
    Within each row, exclusive points of the two sides are paired in
    column order, leaving the row-sum gap unpaired; within each column
    they are paired in row order, leaving the column-sum gap unpaired.
    Every point then carries at most one row link and one column link,
    so following links yields maximal alternating paths. A cycle cannot
    occur: walking one would cross column links always in the same tag
    direction, and each such crossing strictly changes the first image's
    row sum (its points in a shared column always sit in strictly fuller
    rows than non-points), so the walk could never close. The number of
    paths therefore equals the projection distance between the images.

    Each returned chain is oriented so the first image's row sums are
    strictly decreasing along its exclusive points, with a lexicographic
    tie-break when fewer than two such points exist.
    """
    if not is_unique(line_sums(first)):
        raise NotUnique("decompose requires the first image to be uniquely determined")
    tag_of: dict[GridPoint, Membership] = {}
    for p in first.points - second.points:
        tag_of[p] = Membership.FIRST_ONLY
    for p in second.points - first.points:
        tag_of[p] = Membership.SECOND_ONLY

    row_link = _pair_links(tag_of, axis_key=lambda p: p.row, order_key=lambda p: p.col)
    col_link = _pair_links(tag_of, axis_key=lambda p: p.col, order_key=lambda p: p.row)

    first_row_sums = Counter(p.row for p in first.points)
    chains: list[Staircase] = []
    seen: set[GridPoint] = set()
    for start in sorted(tag_of):
        if start in seen or (start in row_link and start in col_link):
            continue
        points = _walk(start, row_link, col_link)
        seen.update(points)
        points = _oriented(points, tag_of, first_row_sums)
        chains.append(Staircase(tuple(points), tuple(tag_of[p] for p in points)))
    assert len(seen) == len(tag_of), "alternating links must form paths only"
    return chains


def validate(stair: Staircase, first: GridSet, second: GridSet) -> bool:
    """Check the chain conditions and that tags match actual membership."""
    points, tags = stair.points, stair.tags
    if not points or len(points) != len(tags):
        return False
    if len(set(points)) != len(points):
        return False
    for p, tag in zip(points, tags):
        exclusive_first = p in first and p not in second
        exclusive_second = p in second and p not in first
        if tag is Membership.FIRST_ONLY and not exclusive_first:
            return False
        if tag is Membership.SECOND_ONLY and not exclusive_second:
            return False
    if any(a is b for a, b in pairwise(tags)):
        return False
    axes = []
    for p, q in pairwise(points):
        if p.row == q.row:
            axes.append("row")
        elif p.col == q.col:
            axes.append("col")
        else:
            return False
    return all(a != b for a, b in pairwise(axes))


def row_gap_floor(k: int) -> int:
    """Least total row-sum discrepancy forced by a chain touching k rows.

    Applies when both images are uniquely determined; the same floor
    holds for columns.
    """
    if k < 1:
        raise ValueError("k must be positive")
    return k * k // 2

"""Lattice point sets, their projections, and partition utilities.

Coordinates follow the matrix convention: row indices grow downward and
column indices grow rightward. All external indices are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import InconsistentSums, NotSorted


class GridPoint(NamedTuple):
    """A lattice point identified by (row, col)."""

    row: int
    col: int


@dataclass(frozen=True)
class GridSet:
    """An immutable finite set of lattice points (a binary image)."""

    points: frozenset[GridPoint]

    @classmethod
    def of(cls, points: Iterable[Sequence[int]]) -> GridSet:
        """Build a set from (row, col) pairs, deduplicating silently."""
        return cls(frozenset(GridPoint(int(r), int(c)) for r, c in points))

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, point: object) -> bool:
        return point in self.points

    def __iter__(self) -> Iterator[GridPoint]:
        # Iterate in (row, col) order so downstream output is stable.
        return iter(sorted(self.points))

    def __bool__(self) -> bool:
        return bool(self.points)


EMPTY_GRID = GridSet(frozenset())


def _as_counts(values: Iterable[int]) -> tuple[int, ...]:
    counts = tuple(int(v) for v in values)
    if any(v < 0 for v in counts):
        raise ValueError("line sums must be non-negative")
    return counts


def _trim(seq: tuple[int, ...]) -> tuple[int, ...]:
    end = len(seq)
    while end and seq[end - 1] == 0:
        end -= 1
    return seq[:end]


@dataclass(frozen=True)
class LineSums:
    """Row and column sum sequences, indexed 1..m and 1..n externally.

    Entries beyond the stored length are implicitly zero, so values that
    differ only in trailing zeros describe the same projections. Two
    LineSums compare equal only when stored entries match exactly; use
    trimmed() or padded() to align them first.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", _as_counts(self.rows))
        object.__setattr__(self, "cols", _as_counts(self.cols))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def row_total(self) -> int:
        return sum(self.rows)

    def col_total(self) -> int:
        return sum(self.cols)

    def is_balanced(self) -> bool:
        """Whether row and column masses agree, as they do for any image."""
        return self.row_total() == self.col_total()

    def padded(self, n_rows: int, n_cols: int) -> LineSums:
        """Extend with trailing zeros to at least the given lengths."""
        rows = self.rows + (0,) * max(0, n_rows - len(self.rows))
        cols = self.cols + (0,) * max(0, n_cols - len(self.cols))
        return LineSums(rows, cols)

    def trimmed(self) -> LineSums:
        """Drop trailing zeros from both sequences."""
        return LineSums(_trim(self.rows), _trim(self.cols))

    def transposed(self) -> LineSums:
        return LineSums(self.cols, self.rows)


def bounding_box(image: GridSet) -> tuple[int, int, int, int] | None:
    """Return (min_row, min_col, max_row, max_col), or None when empty."""
    if not image:
        return None
    rows = [p.row for p in image.points]
    cols = [p.col for p in image.points]
    return min(rows), min(cols), max(rows), max(cols)


def normalize(image: GridSet) -> tuple[GridSet, int, int]:
    """Shift an image so its bounding box starts at (1, 1).

    Returns the shifted image and the (row, col) offsets that were
    subtracted; adding them back to every point reproduces the input
    exactly.
    """
    box = bounding_box(image)
    if box is None:
        return image, 0, 0
    row_shift, col_shift = box[0] - 1, box[1] - 1
    if row_shift == 0 and col_shift == 0:
        return image, 0, 0
    shifted = GridSet(
        frozenset(GridPoint(p.row - row_shift, p.col - col_shift) for p in image.points)
    )
    return shifted, row_shift, col_shift


def _sums_in_box(image: GridSet, n_rows: int, n_cols: int) -> LineSums:
    rows = [0] * n_rows
    cols = [0] * n_cols
    for p in image.points:
        rows[p.row - 1] += 1
        cols[p.col - 1] += 1
    return LineSums(tuple(rows), tuple(cols))


def line_sums(image: GridSet) -> LineSums:
    """Project an image onto row and column counts.

    The result covers the bounding box shifted to start at index 1; use
    normalize() to recover the shift. rows[i - 1] counts the points in
    row i of the shifted image.
    """
    shifted, _, _ = normalize(image)
    box = bounding_box(shifted)
    if box is None:
        return LineSums((), ())
    return _sums_in_box(shifted, box[2], box[3])


def line_sums_in_box(image: GridSet, n_rows: int, n_cols: int) -> LineSums:
    """Project an image inside a fixed 1-based box without shifting.

    Use this when several images share one coordinate frame; distances
    computed from per-image trimmed sums would lose relative position.
    Raises ValueError if a point falls outside the box.
    """
    for p in image.points:
        if not (1 <= p.row <= n_rows and 1 <= p.col <= n_cols):
            raise ValueError(f"point {tuple(p)} outside the {n_rows}x{n_cols} box")
    return _sums_in_box(image, n_rows, n_cols)


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    """Conjugate a non-increasing sequence of non-negative integers.

    The i-th output entry counts the input entries that are >= i, for i
    up to the largest part. Conjugating twice recovers the input with
    trailing zeros removed. Raises NotSorted if the input increases
    anywhere.
    """
    values = _as_counts(parts)
    if any(b > a for a, b in zip(values, values[1:])):
        raise NotSorted("conjugate requires a non-increasing sequence")
    if not values or values[0] == 0:
        return ()
    return tuple(sum(1 for v in values if v >= i) for i in range(1, values[0] + 1))


def _abs_diff(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(abs(x - y) for x, y in zip_longest(a, b, fillvalue=0))


def alpha(first: LineSums, second: LineSums) -> int:
    """Half the L1 distance between two images' projections.

    Sequences are aligned by index, zero-padding the shorter ones at the
    tail; both arguments must therefore live in one coordinate frame.
    The double sum is even whenever each argument is internally
    balanced, so an odd total signals inconsistent input and raises
    InconsistentSums.
    """
    total = _abs_diff(first.rows, second.rows) + _abs_diff(first.cols, second.cols)
    if total % 2:
        raise InconsistentSums(
            "projection distance is odd; the inputs cannot both be balanced"
        )
    return total // 2


def sorted_alpha(first: LineSums, second: LineSums) -> int:
    """alpha with each side's rows and cols rearranged non-increasingly.

    Never exceeds alpha on the same arguments; useful when candidates
    may permute their columns freely.
    """
    return alpha(
        LineSums(sorted(first.rows, reverse=True), sorted(first.cols, reverse=True)),
        LineSums(sorted(second.rows, reverse=True), sorted(second.cols, reverse=True)),
    )


def symm_diff(first: GridSet, second: GridSet) -> GridSet:
    """Points belonging to exactly one of the two images."""
    return GridSet(first.points ^ second.points)


def intersect(first: GridSet, second: GridSet) -> GridSet:
    """Points belonging to both images."""
    return GridSet(first.points & second.points)

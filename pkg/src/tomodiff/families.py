"""Parametric image families that exercise the bounds at known values.

All generators emit 1-based coordinates, so the constructions can be
rendered as grid files without shifting.
"""

from __future__ import annotations

from .grid import GridSet, line_sums_in_box
from .neighbour import neighbour
from .ryser import unique_set


def example_one(m: int, n: int) -> tuple[GridSet, GridSet, GridSet]:
    """Family of two same-sums realizations far from uniquely determined.

    Returns (f1, f2, f3). Rows carry sums (n - i + 1) * m inside an
    n x (n + 1) * m frame. In row i, f2 occupies the first (n - i) * m
    columns plus the m columns right after the following block, while f3
    packs rows 1..n-1 flush left and puts row n's m points at the far
    right. f1 is the closest uniquely determined image to the shared
    sums, built in the neighbour column order. All three images have
    m * n * (n + 1) / 2 points, f2 and f3 differ in 2 * m * n points,
    and their distance to f1 is exactly m.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    width = (n + 1) * m
    f2: list[tuple[int, int]] = []
    f3: list[tuple[int, int]] = []
    for i in range(1, n + 1):
        left = (n - i) * m
        f2.extend((i, j) for j in range(1, left + 1))
        f2.extend((i, j) for j in range(left + m + 1, left + 2 * m + 1))
        if i < n:
            f3.extend((i, j) for j in range(1, left + m + 1))
    f3.extend((n, j) for j in range(n * m + 1, width + 1))
    image2 = GridSet.of(f2)
    image3 = GridSet.of(f3)
    sums = line_sums_in_box(image2, n, width)
    image1 = unique_set(sums.rows, neighbour(sums).sigma)
    return image1, image2, image3


def example_two(n: int) -> tuple[GridSet, GridSet]:
    """Two uniquely determined images whose difference grows like 3n.

    The first has row and column sums (n - 1, n - 2, ..., 1, 0); the
    second replaces the last zero with n on both axes, which pushes one
    point of every row into the final column and fills the final row.
    Their projection distance is n and they differ in 3n - 2 points.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    rows_a = tuple(n - i for i in range(1, n + 1))
    image_a = unique_set(rows_a, tuple(range(1, n + 1)))
    rows_b = rows_a[:-1] + (n,)
    order_b = (n,) + tuple(range(1, n))
    image_b = unique_set(rows_b, order_b)
    return image_a, image_b


def example_three(n: int) -> tuple[GridSet, GridSet]:
    """Two images with different line sums but unit neighbour distances.

    In row i (1 <= i <= n), the first image occupies columns
    1..2(n - i) plus the two columns 2(n - i) + 2 and 2(n - i) + 3, and
    adds a single point at (n + 1, 1); the second occupies columns
    1..2(n - i) + 1 plus column 2(n - i) + 4 and leaves row n + 1
    empty. Sizes are n(n + 1) + 1 and n(n + 1), the symmetric
    difference is 4n + 1, and all three relevant distances equal 1.
    """
    if n < 1:
        raise ValueError("n must be positive")
    f2: list[tuple[int, int]] = [(n + 1, 1)]
    f3: list[tuple[int, int]] = []
    for i in range(1, n + 1):
        base = 2 * (n - i)
        f2.extend((i, j) for j in range(1, base + 1))
        f2.extend(((i, base + 2), (i, base + 3)))
        f3.extend((i, j) for j in range(1, base + 2))
        f3.append((i, base + 4))
    return GridSet.of(f2), GridSet.of(f3)

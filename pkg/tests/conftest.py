"""Shared fixtures: an exhaustive oracle sweep over margins in a 4x4 box."""

from __future__ import annotations

import itertools
from typing import NamedTuple

import pytest

from tomodiff.grid import GridSet, LineSums
from tomodiff.oracle import enumerate_realizations

SWEEP_BOX = 4


class MarginRecord(NamedTuple):
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    masks: tuple[int, ...]


def grid_mask(image: GridSet, n_cols: int) -> int:
    """Pack an image into one integer, row-major, for cheap set algebra."""
    value = 0
    for p in image.points:
        value |= 1 << ((p.row - 1) * n_cols + (p.col - 1))
    return value


@pytest.fixture(scope="session")
def margin_sweep() -> list[MarginRecord]:
    """Every pair of length-4 margin vectors over 0..4 with equal totals.

    Realizations are stored as row-major bitmasks. Margins on smaller
    boxes are these same classes padded with trailing zeros, so the
    sweep covers every box with at most 4 rows and 4 columns.
    """
    by_total: dict[int, list[tuple[int, ...]]] = {}
    for vec in itertools.product(range(SWEEP_BOX + 1), repeat=SWEEP_BOX):
        by_total.setdefault(sum(vec), []).append(vec)
    records = []
    for _, group in sorted(by_total.items()):
        for rows in group:
            for cols in group:
                sums = LineSums(rows, cols)
                masks = tuple(
                    grid_mask(g, SWEEP_BOX) for g in enumerate_realizations(sums)
                )
                records.append(MarginRecord(rows, cols, masks))
    return records

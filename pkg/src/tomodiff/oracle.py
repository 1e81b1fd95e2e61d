"""Brute-force ground truth for realizations of small line sums.

Everything here is intentionally exhaustive and desk-scale; the cap
keeps runaway inputs from looking like hangs. Nothing in this module
consults the closed-form feasibility or neighbour code, so its answers
can be used to cross-check them.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .errors import CapExceeded, Infeasible
from .grid import GridPoint, GridSet, LineSums, alpha, conjugate

DEFAULT_CAP = 10**6


def enumerate_realizations(sums: LineSums, cap: int | None = DEFAULT_CAP) -> list[GridSet]:
    """List every image with the given line sums by backtracking.

    Rows are filled top-down; a branch is cut as soon as some column
    still demands more points than there are rows left. Results come in
    ascending lexicographic order of the per-row column bitmasks (column
    1 is the most significant bit), which makes the order reproducible.
    Raises CapExceeded once more than cap realizations have been found.
    """
    rows, cols = sums.rows, sums.cols
    n = len(cols)
    limit = DEFAULT_CAP if cap is None else int(cap)
    found: list[tuple[tuple[int, ...], ...]] = []
    remaining = list(cols)
    chosen: list[tuple[int, ...]] = []

    def column_mask(combo: tuple[int, ...]) -> int:
        mask = 0
        for j in combo:
            mask |= 1 << (n - 1 - j)
        return mask

    def fill(i: int) -> None:
        if i == len(rows):
            if all(v == 0 for v in remaining):
                if len(found) >= limit:
                    raise CapExceeded(f"more than {limit} realizations")
                found.append(tuple(chosen))
            return
        rows_left = len(rows) - i - 1
        available = [j for j in range(n) if remaining[j] > 0]
        if rows[i] > len(available):
            return
        for combo in sorted(combinations(available, rows[i]), key=column_mask):
            for j in combo:
                remaining[j] -= 1
            if all(remaining[j] <= rows_left for j in range(n)):
                chosen.append(combo)
                fill(i + 1)
                chosen.pop()
            for j in combo:
                remaining[j] += 1

    fill(0)
    return [
        GridSet(
            frozenset(
                GridPoint(i + 1, j + 1)
                for i, combo in enumerate(combos)
                for j in combo
            )
        )
        for combos in found
    ]


def forced_ones(sums: LineSums, cap: int | None = DEFAULT_CAP) -> GridSet:
    """Intersect all realizations; raises Infeasible when there are none."""
    realizations = enumerate_realizations(sums, cap)
    if not realizations:
        raise Infeasible(f"no image has row sums {sums.rows} and column sums {sums.cols}")
    common = frozenset.intersection(*(g.points for g in realizations))
    return GridSet(common)


def extremal_pair(
    sums: LineSums, cap: int | None = DEFAULT_CAP
) -> tuple[GridSet, GridSet, int, bool]:
    """Find two realizations with the largest symmetric difference.

    Returns (first, second, max_symm_diff, disjoint_exists). The pair is
    the earliest in enumeration order achieving the maximum, and
    disjoint_exists reports whether any two realizations, possibly the
    same one for the empty image, have an empty intersection. Raises
    Infeasible when no realization exists, since no pair can be formed.
    """
    realizations = enumerate_realizations(sums, cap)
    if not realizations:
        raise Infeasible(f"no image has row sums {sums.rows} and column sums {sums.cols}")
    frames = [g.points for g in realizations]
    best = (0, 0)
    best_size = -1
    disjoint = False
    for a in range(len(frames)):
        for b in range(a, len(frames)):
            d = len(frames[a] ^ frames[b])
            if d > best_size:
                best_size = d
                best = (a, b)
            if not frames[a] & frames[b]:
                disjoint = True
    return realizations[best[0]], realizations[best[1]], best_size, disjoint


def _non_increasing_sequences(max_val: int, max_len: int) -> Iterator[tuple[int, ...]]:
    def extend(prefix: tuple[int, ...], high: int) -> Iterator[tuple[int, ...]]:
        yield prefix
        if len(prefix) == max_len:
            return
        for v in range(high, 0, -1):
            yield from extend(prefix + (v,), v)

    yield from extend((), max_val)


def min_alpha_unique_bruteforce(
    sums: LineSums, max_val: int, max_len: int
) -> tuple[int, list[LineSums]]:
    """Exhaustively minimize the projection distance to uniquely determined sums.

    Candidates are all non-increasing column-sum sequences with at most
    max_len entries, each at most max_val; their row sums are the
    conjugates. Both the input and every candidate are compared in
    sorted order, which never increases the distance and keeps the
    search finite. Returns the minimum and every minimizing candidate.
    """
    reference = LineSums(
        tuple(sorted(sums.rows, reverse=True)), tuple(sorted(sums.cols, reverse=True))
    )
    best: int | None = None
    witnesses: list[LineSums] = []
    for v in _non_increasing_sequences(max_val, max_len):
        candidate = LineSums(conjugate(v), v)
        distance = alpha(reference, candidate)
        if best is None or distance < best:
            best = distance
            witnesses = [candidate]
        elif distance == best:
            witnesses.append(candidate)
    assert best is not None  # the empty candidate always participates
    return best, witnesses

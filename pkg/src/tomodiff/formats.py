"""Grid files, sums files, and report documents used by the CLI."""

from __future__ import annotations

import json

from .errors import TomographyError
from .grid import GridPoint, GridSet, LineSums


class FormatError(TomographyError):
    """An input document does not follow the documented formats."""


PRESENT_CHARS = frozenset("1#")
ABSENT_CHARS = frozenset("0.")


def parse_grid(text: str) -> tuple[GridSet, int, int]:
    """Parse an ASCII grid into an image plus its full (rows, cols) extent.

    Lines are rows, top to bottom; characters are columns, left to
    right. '1' and '#' mark points, '0' and '.' mark empty cells. All
    lines must have equal length.
    """
    lines = text.splitlines()
    width = len(lines[0]) if lines else 0
    points: list[tuple[int, int]] = []
    for r, line in enumerate(lines, start=1):
        if len(line) != width:
            raise FormatError(f"line {r} has length {len(line)}, expected {width}")
        for c, ch in enumerate(line, start=1):
            if ch in PRESENT_CHARS:
                points.append((r, c))
            elif ch not in ABSENT_CHARS:
                raise FormatError(f"unexpected character {ch!r} at line {r}, column {c}")
    return GridSet.of(points), len(lines), width


def render_grid(image: GridSet, n_rows: int, n_cols: int) -> str:
    """Render an image as '0'/'1' lines covering the given extent."""
    for p in image.points:
        if not (1 <= p.row <= n_rows and 1 <= p.col <= n_cols):
            raise ValueError(f"point {tuple(p)} outside the {n_rows}x{n_cols} box")
    lines = [
        "".join(
            "1" if GridPoint(r, c) in image.points else "0"
            for c in range(1, n_cols + 1)
        )
        for r in range(1, n_rows + 1)
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_sums(text: str) -> LineSums:
    """Parse a sums document: a JSON object with integer arrays rows and cols.

    Entries are 1-based row and column sums; trailing zeros are allowed
    and kept, since they fix the frame for reconstruction.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"sums document is not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or set(data) != {"rows", "cols"}:
        raise FormatError('sums document must be an object with exactly "rows" and "cols"')
    for key in ("rows", "cols"):
        value = data[key]
        ok = isinstance(value, list) and all(
            isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in value
        )
        if not ok:
            raise FormatError(f'"{key}" must be an array of non-negative integers')
    return LineSums(tuple(data["rows"]), tuple(data["cols"]))


def render_sums(sums: LineSums) -> str:
    return json.dumps({"rows": list(sums.rows), "cols": list(sums.cols)}) + "\n"

"""Command-line front end for batch analysis of binary-image projections.

Exit codes: 0 success, 2 parse or usage errors, 3 infeasible line sums,
4 enumeration cap exceeded. Diagnostics go to stderr; results go to
stdout or to files named with -o.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bounds import BoundReport, analyze_pair
from .errors import CapExceeded, Infeasible
from .families import example_one, example_three, example_two
from .formats import FormatError, parse_grid, parse_sums, render_grid
from .grid import GridSet, LineSums, line_sums_in_box
from .neighbour import AxisConditions, neighbour, no_forced_ones_condition
from .oracle import DEFAULT_CAP, enumerate_realizations, extremal_pair, forced_ones
from .ryser import is_consistent, is_unique, reconstruct, unique_set
from .staircase import decompose

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INFEASIBLE = 3
EXIT_CAP = 4

AXIS_NOTE = (
    "axis flags disagree; only both axes strict certifies that no point "
    "is contained in every realization"
)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _read_sums(path: str) -> LineSums:
    return parse_sums(_read_text(path))


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _condition_doc(flags: AxisConditions) -> dict:
    doc: dict = {"col_axis": flags.col_axis, "row_axis": flags.row_axis}
    if flags.col_axis != flags.row_axis:
        doc["note"] = AXIS_NOTE
    return doc


def cmd_check(args: argparse.Namespace) -> int:
    sums = _read_sums(args.sums)
    feasible = is_consistent(sums)
    _emit({"feasible": feasible, "unique": is_unique(sums) if feasible else None})
    if not feasible:
        print("infeasible", file=sys.stderr)
        return EXIT_INFEASIBLE
    return EXIT_OK


def cmd_reconstruct(args: argparse.Namespace) -> int:
    sums = _read_sums(args.sums)
    image = reconstruct(sums)
    text = render_grid(image, len(sums.rows), len(sums.cols))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_neighbour(args: argparse.Namespace) -> int:
    sums = _read_sums(args.sums)
    summary = neighbour(sums)
    flags = no_forced_ones_condition(sums)
    _emit(
        {
            "rows": list(sums.rows),
            "cols": list(sums.cols),
            "neighbour_cols": list(summary.neighbour_sums.cols),
            "sigma": list(summary.sigma),
            "alpha0": summary.alpha0,
            "unique": is_unique(sums),
            "no_forced_points_condition": _condition_doc(flags),
        }
    )
    return EXIT_OK


def _staircase_doc(first: GridSet, second: GridSet) -> dict:
    chains = decompose(first, second)
    return {
        "count": len(chains),
        "points": sum(len(c) for c in chains),
        "lengths": [len(c) for c in chains],
    }


def _report_doc(report: BoundReport) -> dict:
    return {
        "sizes": {"first": report.size_f2, "second": report.size_f3},
        "line_sums_equal": report.line_sums_equal,
        "alpha": {
            "first_vs_neighbour": report.alpha_f2,
            "second_vs_neighbour": report.alpha_f3,
            "neighbour_pair": report.alpha_unique_pair,
        },
        "actual": {
            "symm_diff": report.actual_symm_diff,
            "intersection": report.actual_intersection,
        },
        "bounds": [
            {
                "name": check.name,
                "value": check.value,
                "applicable": check.applicable,
                "satisfied": check.satisfied,
                "slack": check.slack,
            }
            for check in report.bounds
        ],
    }


def cmd_analyze(args: argparse.Namespace) -> int:
    image_a, rows_a, cols_a = parse_grid(_read_text(args.first))
    image_b, rows_b, cols_b = parse_grid(_read_text(args.second))
    doc = _report_doc(analyze_pair(image_a, image_b))

    n_rows = max(rows_a, rows_b)
    n_cols = max(cols_a, cols_b)
    sums_a = line_sums_in_box(image_a, n_rows, n_cols)
    sums_b = line_sums_in_box(image_b, n_rows, n_cols)
    nb_a = unique_set(sums_a.rows, neighbour(sums_a).sigma)
    nb_b = unique_set(sums_b.rows, neighbour(sums_b).sigma)
    doc["staircases"] = {
        "first_vs_neighbour": _staircase_doc(nb_a, image_a),
        "second_vs_neighbour": _staircase_doc(nb_b, image_b),
        "neighbour_pair": _staircase_doc(nb_a, nb_b),
    }
    doc["no_forced_points_condition"] = {
        "first": _condition_doc(no_forced_ones_condition(sums_a)),
        "second": _condition_doc(no_forced_ones_condition(sums_b)),
    }
    _emit(doc)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    sums = _read_sums(args.sums)
    if args.forced:
        forced = forced_ones(sums, args.cap)
        _emit({"forced": [[p.row, p.col] for p in forced]})
    elif args.extremal:
        first, second, max_diff, disjoint = extremal_pair(sums, args.cap)
        _emit(
            {
                "max_symm_diff": max_diff,
                "disjoint_exists": disjoint,
                "first": [[p.row, p.col] for p in first],
                "second": [[p.row, p.col] for p in second],
            }
        )
    else:
        _emit({"count": len(enumerate_realizations(sums, args.cap))})
    return EXIT_OK


def cmd_example(args: argparse.Namespace) -> int:
    out_dir = Path(args.output)
    out_dir.mkdir(parents=True, exist_ok=True)
    n = args.n
    if args.family == "one":
        m = args.m if args.m is not None else 1
        f1, f2, f3 = example_one(m, n)
        extent = (n, (n + 1) * m)
        files = {"f1.grid": f1, "f2.grid": f2, "f3.grid": f3}
    elif args.family == "two":
        if args.m is not None:
            print("error: --m applies only to family 'one'", file=sys.stderr)
            return EXIT_PARSE
        a, b = example_two(n)
        extent = (n, n)
        files = {"f1.grid": a, "f1_alt.grid": b}
    else:
        if args.m is not None:
            print("error: --m applies only to family 'one'", file=sys.stderr)
            return EXIT_PARSE
        f2, f3 = example_three(n)
        extent = (n + 1, 2 * n + 2)
        files = {"f2.grid": f2, "f3.grid": f3}
    for name, image in files.items():
        path = out_dir / name
        path.write_text(render_grid(image, *extent), encoding="utf-8")
        print(path)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tomodiff",
        description="Analyze how much binary images with given row and column sums can differ.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="feasibility and uniqueness of a sums file")
    p_check.add_argument("sums", help="path to a sums file, or - for stdin")
    p_check.set_defaults(handler=cmd_check)

    p_rec = sub.add_parser("reconstruct", help="canonical realization of a sums file")
    p_rec.add_argument("sums", help="path to a sums file, or - for stdin")
    p_rec.add_argument("-o", "--output", help="write the grid here instead of stdout")
    p_rec.set_defaults(handler=cmd_reconstruct)

    p_nb = sub.add_parser("neighbour", help="closest uniquely determined sums")
    p_nb.add_argument("sums", help="path to a sums file, or - for stdin")
    p_nb.set_defaults(handler=cmd_neighbour)

    p_an = sub.add_parser("analyze", help="bound report for two grid files")
    p_an.add_argument("first", help="path to the first grid file")
    p_an.add_argument("second", help="path to the second grid file")
    p_an.set_defaults(handler=cmd_analyze)

    p_or = sub.add_parser("oracle", help="brute-force ground truth at desk scale")
    p_or.add_argument("sums", help="path to a sums file, or - for stdin")
    group = p_or.add_mutually_exclusive_group()
    group.add_argument("--count", action="store_true", help="count realizations (default)")
    group.add_argument("--forced", action="store_true", help="points present in every realization")
    group.add_argument("--extremal", action="store_true", help="pair of realizations differing most")
    p_or.add_argument("--cap", type=int, default=DEFAULT_CAP, help="realization cap")
    p_or.set_defaults(handler=cmd_oracle)

    p_ex = sub.add_parser("example", help="emit a built-in image family as grid files")
    p_ex.add_argument("family", choices=("one", "two", "three"))
    p_ex.add_argument("--n", type=int, required=True, help="family size parameter")
    p_ex.add_argument("--m", type=int, default=None, help="width multiplier (family 'one' only)")
    p_ex.add_argument("-o", "--output", default=".", help="directory for the grid files")
    p_ex.set_defaults(handler=cmd_example)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())

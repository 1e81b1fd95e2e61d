import json

import pytest
from hypothesis import given, strategies as st

from tomodiff.cli import main
from tomodiff.formats import FormatError, parse_grid, parse_sums, render_grid, render_sums
from tomodiff.grid import GridSet, LineSums, line_sums_in_box
from tomodiff.ryser import reconstruct


def write_sums(tmp_path, rows, cols, name="sums.json"):
    path = tmp_path / name
    path.write_text(json.dumps({"rows": list(rows), "cols": list(cols)}))
    return str(path)


class TestFormats:
    def test_grid_round_trip(self):
        text = "0110\n1001\n0000\n"
        image, n_rows, n_cols = parse_grid(text)
        assert (n_rows, n_cols) == (3, 4)
        assert render_grid(image, n_rows, n_cols) == text

    def test_grid_accepts_hash_and_dot(self):
        image, _, _ = parse_grid("#.\n.#\n")
        assert image == GridSet.of([(1, 1), (2, 2)])

    def test_grid_rejects_ragged_lines(self):
        with pytest.raises(FormatError):
            parse_grid("01\n0\n")

    def test_grid_rejects_unknown_chars(self):
        with pytest.raises(FormatError):
            parse_grid("0x\n00\n")

    def test_empty_grid(self):
        image, n_rows, n_cols = parse_grid("")
        assert len(image) == 0 and (n_rows, n_cols) == (0, 0)
        assert render_grid(image, 0, 0) == ""

    def test_sums_round_trip(self):
        sums = LineSums((2, 1), (2, 1, 0))
        assert parse_sums(render_sums(sums)) == sums

    @given(
        st.integers(1, 6),
        st.integers(1, 6),
        st.frozensets(st.tuples(st.integers(1, 6), st.integers(1, 6)), max_size=20),
    )
    def test_grid_render_parse_round_trip(self, n_rows, n_cols, points):
        image = GridSet.of(
            (r, c) for r, c in points if r <= n_rows and c <= n_cols
        )
        text = render_grid(image, n_rows, n_cols)
        parsed, rows, cols = parse_grid(text)
        assert (parsed, rows, cols) == (image, n_rows, n_cols)

    def test_sums_rejects_bad_documents(self):
        for text in (
            "not json",
            '{"rows": [1]}',
            '{"rows": [1], "cols": [1], "extra": 1}',
            '{"rows": [1, -1], "cols": [0]}',
            '{"rows": [1.5], "cols": [1]}',
            '{"rows": [true], "cols": [1]}',
        ):
            with pytest.raises(FormatError):
                parse_sums(text)


class TestCheckCommand:
    def test_feasible_unique(self, tmp_path, capsys):
        path = write_sums(tmp_path, (2, 1), (2, 1))
        assert main(["check", path]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc == {"feasible": True, "unique": True}

    def test_feasible_ambiguous(self, tmp_path, capsys):
        path = write_sums(tmp_path, (1, 1), (1, 1))
        assert main(["check", path]) == 0
        assert json.loads(capsys.readouterr().out)["unique"] is False

    def test_infeasible_exits_3(self, tmp_path, capsys):
        path = write_sums(tmp_path, (2, 2), (3, 1))
        assert main(["check", path]) == 3
        captured = capsys.readouterr()
        assert json.loads(captured.out) == {"feasible": False, "unique": None}
        assert "infeasible" in captured.err

    def test_parse_error_exits_2(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{")
        assert main(["check", str(path)]) == 2
        assert "error" in capsys.readouterr().err

    def test_missing_file_exits_2(self, tmp_path, capsys):
        assert main(["check", str(tmp_path / "absent.json")]) == 2

    def test_usage_error_exits_2(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["check"])
        assert excinfo.value.code == 2


class TestReconstructCommand:
    def test_writes_grid_file(self, tmp_path, capsys):
        sums_path = write_sums(tmp_path, (2, 1), (2, 1))
        out_path = tmp_path / "image.grid"
        assert main(["reconstruct", sums_path, "-o", str(out_path)]) == 0
        assert out_path.read_text() == "11\n10\n"

    def test_stdout_default(self, tmp_path, capsys):
        sums_path = write_sums(tmp_path, (2, 1), (2, 1))
        assert main(["reconstruct", sums_path]) == 0
        assert capsys.readouterr().out == "11\n10\n"

    def test_infeasible_exits_3(self, tmp_path, capsys):
        sums_path = write_sums(tmp_path, (2, 2), (3, 1))
        assert main(["reconstruct", sums_path]) == 3

    def test_round_trip_unique_grid_is_byte_identical(self, tmp_path):
        text = "1110\n1100\n1000\n0000\n"
        image, n_rows, n_cols = parse_grid(text)
        sums = line_sums_in_box(image, n_rows, n_cols)
        rebuilt = reconstruct(sums)
        assert render_grid(rebuilt, n_rows, n_cols) == text


class TestNeighbourCommand:
    def test_reports_summary_and_flags(self, tmp_path, capsys):
        path = write_sums(tmp_path, (1, 1), (1, 1))
        assert main(["neighbour", path]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["alpha0"] == 1
        assert doc["neighbour_cols"] == [2, 0]
        assert doc["sigma"] == [1, 2]
        assert doc["unique"] is False
        assert doc["no_forced_points_condition"] == {
            "col_axis": True,
            "row_axis": True,
        }

    def test_disagreeing_axes_carry_a_note(self, tmp_path, capsys):
        path = write_sums(tmp_path, (2, 1, 1), (2, 2))
        assert main(["neighbour", path]) == 0
        doc = json.loads(capsys.readouterr().out)
        condition = doc["no_forced_points_condition"]
        assert condition["col_axis"] is True
        assert condition["row_axis"] is False
        assert "note" in condition

    def test_infeasible_exits_3(self, tmp_path):
        path = write_sums(tmp_path, (2, 2), (3, 1))
        assert main(["neighbour", path]) == 3


class TestOracleCommand:
    def test_count_default(self, tmp_path, capsys):
        path = write_sums(tmp_path, (1, 1), (1, 1))
        assert main(["oracle", path]) == 0
        assert json.loads(capsys.readouterr().out) == {"count": 2}

    def test_forced(self, tmp_path, capsys):
        path = write_sums(tmp_path, (2, 1, 1), (2, 2))
        assert main(["oracle", path, "--forced"]) == 0
        assert json.loads(capsys.readouterr().out) == {"forced": [[1, 1], [1, 2]]}

    def test_extremal(self, tmp_path, capsys):
        path = write_sums(tmp_path, (1, 1), (1, 1))
        assert main(["oracle", path, "--extremal"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["max_symm_diff"] == 4
        assert doc["disjoint_exists"] is True

    def test_cap_exceeded_exits_4(self, tmp_path, capsys):
        path = write_sums(tmp_path, (1, 1), (1, 1))
        assert main(["oracle", path, "--cap", "1"]) == 4

    def test_forced_infeasible_exits_3(self, tmp_path):
        path = write_sums(tmp_path, (2, 2), (3, 1))
        assert main(["oracle", path, "--forced"]) == 3


class TestExampleCommand:
    def test_family_one_files_then_analyze(self, tmp_path, capsys):
        assert main(["example", "one", "--m", "3", "--n", "5", "-o", str(tmp_path)]) == 0
        capsys.readouterr()
        assert main(
            ["analyze", str(tmp_path / "f2.grid"), str(tmp_path / "f3.grid")]
        ) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["actual"]["symm_diff"] == 30
        assert doc["alpha"]["first_vs_neighbour"] == 3
        named = {entry["name"]: entry for entry in doc["bounds"]}
        assert named["diff_pair_equal_sums"]["value"] == pytest.approx(108, abs=1e-9)
        assert named["diff_pair_equal_sums"]["satisfied"] is True
        assert doc["staircases"]["first_vs_neighbour"]["count"] == 3

    def test_family_two_files(self, tmp_path, capsys):
        assert main(["example", "two", "--n", "3", "-o", str(tmp_path)]) == 0
        listed = capsys.readouterr().out.splitlines()
        assert len(listed) == 2
        assert (tmp_path / "f1.grid").read_text() == "110\n100\n000\n"
        assert (tmp_path / "f1_alt.grid").read_text() == "101\n001\n111\n"

    def test_family_three_files(self, tmp_path, capsys):
        assert main(["example", "three", "--n", "2", "-o", str(tmp_path)]) == 0
        f2 = (tmp_path / "f2.grid").read_text()
        f3 = (tmp_path / "f3.grid").read_text()
        assert f2 == "110110\n011000\n100000\n"
        assert f3 == "111001\n100100\n000000\n"

    def test_m_rejected_for_other_families(self, tmp_path, capsys):
        assert main(["example", "two", "--n", "3", "--m", "2", "-o", str(tmp_path)]) == 2

    def test_deterministic_output(self, tmp_path, capsys):
        first_dir = tmp_path / "a"
        second_dir = tmp_path / "b"
        main(["example", "three", "--n", "3", "-o", str(first_dir)])
        main(["example", "three", "--n", "3", "-o", str(second_dir)])
        capsys.readouterr()
        assert (first_dir / "f2.grid").read_bytes() == (second_dir / "f2.grid").read_bytes()


class TestStdinInput:
    def test_dash_reads_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO('{"rows": [1], "cols": [1]}'))
        assert main(["check", "-"]) == 0
        assert json.loads(capsys.readouterr().out) == {"feasible": True, "unique": True}


class TestTrailingZeros:
    def test_reconstruct_keeps_declared_frame(self, tmp_path, capsys):
        path = write_sums(tmp_path, (2, 1), (2, 1, 0))
        assert main(["reconstruct", path]) == 0
        assert capsys.readouterr().out == "110\n100\n"


class TestModuleEntryPoint:
    def test_python_dash_m(self, tmp_path):
        import subprocess
        import sys

        path = write_sums(tmp_path, (2, 1), (2, 1))
        proc = subprocess.run(
            [sys.executable, "-m", "tomodiff", "check", path],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout) == {"feasible": True, "unique": True}


class TestAnalyzeCommand:
    def test_deterministic_report(self, tmp_path, capsys):
        (tmp_path / "a.grid").write_text("10\n01\n")
        (tmp_path / "b.grid").write_text("01\n10\n")
        main(["analyze", str(tmp_path / "a.grid"), str(tmp_path / "b.grid")])
        first = capsys.readouterr().out
        main(["analyze", str(tmp_path / "a.grid"), str(tmp_path / "b.grid")])
        second = capsys.readouterr().out
        assert first == second
        doc = json.loads(first)
        assert doc["actual"]["symm_diff"] == 4
        assert doc["line_sums_equal"] is True

    def test_bad_grid_exits_2(self, tmp_path, capsys):
        (tmp_path / "a.grid").write_text("0?\n00\n")
        (tmp_path / "b.grid").write_text("00\n00\n")
        assert main(["analyze", str(tmp_path / "a.grid"), str(tmp_path / "b.grid")]) == 2

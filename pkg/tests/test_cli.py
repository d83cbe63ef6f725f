"""Command-line surface: outputs, exit codes, determinism."""

from importlib import resources

import pytest

from qsteane.cli import EXIT_INPUT_ERROR, EXIT_OK, EXIT_VERIFY_FAIL, main


def fixture_path(name: str) -> str:
    return str(resources.files("qsteane.fixtures").joinpath(name))


class TestVerify:
    def test_reports_parameters(self, capsys):
        assert main(["verify", fixture_path("c14_9_2.txt")]) == EXIT_OK
        out = capsys.readouterr().out
        assert out == "n=14 k=9 d=2 d2=4 dual_containing=yes\n"

    def test_missing_file(self, capsys):
        assert main(["verify", "/no/such/file"]) == EXIT_INPUT_ERROR
        assert "error:" in capsys.readouterr().err

    def test_bad_matrix(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("10\n1\n")
        assert main(["verify", str(bad)]) == EXIT_INPUT_ERROR
        assert "line 2" in capsys.readouterr().err


class TestSteane:
    def test_auto_recovery_with_exact_distance(self, capsys):
        code = main(["steane", "--auto", fixture_path("c14_9_2.txt"), "--exact"])
        assert code == EXIT_OK
        assert capsys.readouterr().out == "[[14,2,4]] exact d=4\n"

    def test_explicit_inner_code(self, tmp_path, capsys):
        from qsteane.gf2 import even_weight_code, render_matrix

        from conftest import EXT_HAMMING_8_4

        inner = tmp_path / "c.txt"
        outer = tmp_path / "cp.txt"
        # Self-dual [8,4,4] inside the even-weight [8,7,2] code.
        inner.write_text(render_matrix(EXT_HAMMING_8_4.gen))
        outer.write_text(render_matrix(even_weight_code(8).gen))
        assert main(["steane", str(inner), str(outer)]) == EXIT_OK
        assert capsys.readouterr().out.startswith("[[8,3,")

    def test_auto_failure_is_input_error(self, capsys):
        code = main(["steane", "--auto", fixture_path("c18_12_4.txt")])
        assert code == EXIT_INPUT_ERROR
        assert "dual-containing" in capsys.readouterr().err

    def test_missing_inner_code(self, capsys):
        assert main(["steane", fixture_path("c14_9_2.txt")]) == EXIT_INPUT_ERROR


class TestTable1:
    def test_exit_and_row_lines(self, capsys):
        # The n=18 row cannot be rebuilt (its published enlargement code
        # is not dual-containing), so the overall verdict is FAIL.
        assert main(["table1"]) == EXIT_VERIFY_FAIL
        out = capsys.readouterr().out
        lines = out.splitlines()
        assert len(lines) == 7
        assert sum(" PASS " in line for line in lines) == 5
        assert "n=18" in lines[5] and "FAIL" in lines[5]
        assert lines[6] == "table1: FAIL"

    def test_byte_identical_runs(self, capsys):
        main(["table1"])
        first = capsys.readouterr().out
        main(["table1"])
        second = capsys.readouterr().out
        assert first == second


class TestFamily:
    def test_params_only(self, capsys):
        assert main(["family", "F5", "7", "1"]) == EXIT_OK
        assert capsys.readouterr().out == "[[128,71,11]] (params only)\n"

    def test_lowercase_family(self, capsys):
        assert main(["family", "f0", "5", "1"]) == EXIT_OK
        assert capsys.readouterr().out == "[[32,15,6]]\n"

    def test_build_proven(self, capsys):
        assert main(["family", "F0", "5", "1", "--build"]) == EXIT_OK
        assert capsys.readouterr().out == "[[32,15,6]] bound holds by construction\n"

    def test_invalid_parameters(self, capsys):
        assert main(["family", "F0", "4", "1"]) == EXIT_INPUT_ERROR

    def test_build_refused_beyond_desk_scale(self, capsys):
        assert main(["family", "F0", "7", "1", "--build"]) == EXIT_INPUT_ERROR


class TestBounds:
    def test_writes_grid_csv(self, tmp_path, capsys):
        out = tmp_path / "curve.csv"
        assert main(["bounds", "0", "0.5", "0.001", str(out)]) == EXIT_OK
        lines = out.read_text().splitlines()
        assert lines[0] == "delta,gf4,cs,steane,thm4"
        assert len(lines) == 502
        assert capsys.readouterr().out == f"wrote 501 points to {out}\n"

    def test_byte_identical_runs(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        main(["bounds", "0", "0.5", "0.001", str(a)])
        main(["bounds", "0", "0.5", "0.001", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_bad_range(self, capsys):
        assert main(["bounds", "0.4", "0.2", "0.01", "/tmp/x.csv"]) == EXIT_INPUT_ERROR

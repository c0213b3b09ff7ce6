import json
import subprocess
import sys

from tcc.cli import EXIT_FAILURE, EXIT_GUARD, EXIT_OK, EXIT_USAGE, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSpectrumCommand:
    def test_merged_eigenvalue_case(self, capsys):
        code, out, _ = run_cli(capsys, "spectrum", "--n", "2", "--p", "3", "--x", "1", "--y", "1")
        assert code == EXIT_OK
        assert "eigenvalue 0 with multiplicity 1" in out
        assert "eigenvalue 1 with multiplicity 1" in out
        assert "agrees" in out
        assert "diagonalizable: yes" in out

    def test_defective_case(self, capsys):
        code, out, _ = run_cli(capsys, "spectrum", "--n", "3", "--p", "3", "--x", "1", "--y", "1")
        assert code == EXIT_OK
        assert "eigenvalue 1 with multiplicity 2" in out
        assert "diagonalizable: no" in out

    def test_defective_case_json_omits_diagonal(self, capsys):
        code, out, _ = run_cli(
            capsys, "spectrum", "--n", "3", "--p", "3", "--x", "1", "--y", "1", "--json"
        )
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["diagonalizable"] is False
        assert "diagonal" not in doc

    def test_json_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "spectrum", "--n", "2", "--p", "3", "--x", "1", "--y", "1", "--json"
        )
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["eigenvalues"] == [[0, 1], [1, 1]]
        assert doc["diagonalizable"] is True
        assert doc["diagonal"] == [0, 1]
        assert doc["scan_agrees"] is True
        # Machine output must round-trip.
        assert json.loads(json.dumps(doc)) == doc

    def test_order_one_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "spectrum", "--n", "1", "--p", "3", "--x", "1", "--y", "1")
        assert code == EXIT_USAGE
        assert "order n" in err

    def test_non_prime_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "spectrum", "--n", "2", "--p", "4", "--x", "1", "--y", "1")
        assert code == EXIT_USAGE
        assert "prime" in err

    def test_scan_skipped_for_large_prime(self, capsys):
        code, out, _ = run_cli(capsys, "spectrum", "--n", "2", "--p", "1009", "--x", "1", "--y", "1")
        assert code == EXIT_OK
        assert "skipped" in out
        assert "diagonalizable: yes" in out


class TestBuildCommand:
    def test_worked_example(self, capsys):
        code, out, _ = run_cli(capsys, "build", "--n", "2", "--p", "3", "--x", "1", "--y", "1", "--a", "2")
        assert code == EXIT_OK
        assert "dim = 1" in out
        assert "[1 1 1 1]" in out

    def test_untwisted_centralizer_has_dim_at_least_two(self, capsys):
        code, out, _ = run_cli(
            capsys, "build", "--n", "2", "--p", "3", "--x", "1", "--y", "1", "--a", "1", "--json"
        )
        assert code == EXIT_OK
        assert json.loads(out)["dimension"] >= 2

    def test_json_schema(self, capsys):
        code, out, _ = run_cli(
            capsys, "build", "--n", "2", "--p", "3", "--x", "1", "--y", "1", "--a", "2", "--json"
        )
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc == {"p": 3, "n": 2, "x": 1, "y": 1, "a": 2, "length": 4, "dimension": 1}

    def test_matrix_file_input(self, capsys, tmp_path):
        path = tmp_path / "a.mat"
        path.write_text("3 2 2\n2 1\n1 2\n")
        code, out, _ = run_cli(capsys, "build", "--matrix-file", str(path), "--a", "2", "--json")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc == {"p": 3, "n": 2, "a": 2, "length": 4, "dimension": 1}
        assert "x" not in doc and "y" not in doc

    def test_malformed_matrix_file(self, capsys, tmp_path):
        path = tmp_path / "bad.mat"
        path.write_text("3 2 2\n2 9\n1 2\n")
        code, _, err = run_cli(capsys, "build", "--matrix-file", str(path), "--a", "2")
        assert code == EXIT_USAGE
        assert "line 2, column 2" in err

    def test_missing_matrix_file(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "build", "--matrix-file", str(tmp_path / "nope"), "--a", "2")
        assert code == EXIT_USAGE
        assert "cannot read" in err

    def test_non_square_matrix_file(self, capsys, tmp_path):
        path = tmp_path / "rect.mat"
        path.write_text("3 1 2\n1 2\n")
        code, _, err = run_cli(capsys, "build", "--matrix-file", str(path), "--a", "2")
        assert code == EXIT_USAGE
        assert "square" in err

    def test_params_or_file_required(self, capsys):
        code, _, err = run_cli(capsys, "build", "--a", "2")
        assert code == EXIT_USAGE
        assert "--matrix-file" in err


class TestAnalyzeCommand:
    def test_nine_one_nine_over_gf7(self, capsys):
        code, out, _ = run_cli(
            capsys, "analyze", "--n", "3", "--p", "7", "--x", "2", "--y", "1", "--a", "3", "--json"
        )
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc == {
            "p": 7,
            "n": 3,
            "x": 2,
            "y": 1,
            "a": 3,
            "length": 9,
            "dimension": 1,
            "min_distance": 9,
            "mds": True,
            "detect": 8,
            "correct": 4,
            "rate": "1/9",
        }

    def test_human_rendering(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--n", "2", "--p", "3", "--x", "1", "--y", "1", "--a", "2")
        assert code == EXIT_OK
        assert "[4, 1, 4]" in out
        assert "MDS: yes" in out
        assert "rate: 1/4" in out

    def test_zero_code_reported(self, capsys, tmp_path):
        path = tmp_path / "ident.mat"
        path.write_text("3 2 2\n1 0\n0 1\n")
        code, _, err = run_cli(capsys, "analyze", "--matrix-file", str(path), "--a", "0")
        assert code == EXIT_USAGE
        assert "zero code" in err

    def test_full_space_from_zero_matrix(self, capsys, tmp_path):
        path = tmp_path / "zero.mat"
        path.write_text("3 2 2\n0 0\n0 0\n")
        code, out, _ = run_cli(capsys, "analyze", "--matrix-file", str(path), "--a", "1", "--json")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert (doc["length"], doc["dimension"], doc["min_distance"]) == (4, 4, 1)
        assert doc["mds"] is True
        assert "x" not in doc and "y" not in doc  # unknown under --matrix-file, omitted


class TestVerifyCommand:
    def test_small_sweep_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--p-max", "3", "--n-max", "3")
        assert code == EXIT_OK
        assert "0 mismatches" in out

    def test_stock_sweep_verifies(self, capsys):
        # The headline check: defaults (p <= 7, n <= 5) must come back clean.
        code, out, _ = run_cli(capsys, "verify")
        assert code == EXIT_OK
        assert "2012 tuples, 162 met the hypotheses, 0 mismatches" in out

    def test_json_rows(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--p-max", "3", "--n-max", "2", "--json")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["ok"] is True
        assert doc["tuples"] == len(doc["rows"]) == 8 + 27
        met = [row for row in doc["rows"] if row["hypotheses_met"]]
        assert all(row["matches_theorem"] for row in met)
        unmet = [row for row in doc["rows"] if not row["hypotheses_met"]]
        assert all("min_distance" not in row and "matches_theorem" not in row for row in unmet)

    def test_sweep_caps_enforced(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--p-max", "17")
        assert code == EXIT_USAGE
        assert "--p-max" in err
        code, _, err = run_cli(capsys, "verify", "--n-max", "7")
        assert code == EXIT_USAGE
        assert "--n-max" in err


class TestSimulateCommand:
    def test_monte_carlo_within_capacity_passes(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "simulate", "--n", "2", "--p", "3", "--x", "1", "--y", "1", "--a", "2",
            "--t", "1", "--trials", "100",
        )
        assert code == EXIT_OK
        assert "PASS" in out

    def test_zero_weight_full_success(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "simulate", "--n", "2", "--p", "3", "--x", "1", "--y", "1", "--a", "2",
            "--t", "0", "--trials", "50", "--json",
        )
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["successes"] == doc["trials"] == 50

    def test_exhaustive_within_capacity(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "simulate", "--n", "3", "--p", "5", "--x", "3", "--y", "1", "--a", "2",
            "--t", "4", "--exhaustive", "--json",
        )
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["verdict"] == "PASS"
        assert doc["trials"] == doc["successes"] == 161280
        assert "seed" not in doc

    def test_beyond_capacity_fails(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "simulate", "--n", "3", "--p", "5", "--x", "3", "--y", "1", "--a", "2",
            "--t", "9", "--trials", "50",
        )
        assert code == EXIT_FAILURE
        assert "exceeds correction capacity 4" in out

    def test_hypotheses_warning(self, capsys):
        code, _, err = run_cli(
            capsys,
            "simulate", "--n", "3", "--p", "5", "--x", "1", "--y", "1", "--a", "2",
            "--t", "1", "--trials", "10",
        )
        # 5 does not divide x*n + y = 4: the note fires whatever the outcome.
        assert "hypotheses" in err
        assert code in (EXIT_OK, EXIT_FAILURE, EXIT_USAGE)

    def test_exhaustive_guard_exit_code(self, capsys):
        code, _, err = run_cli(
            capsys,
            "simulate", "--n", "4", "--p", "3", "--x", "1", "--y", "2", "--a", "2",
            "--t", "10", "--exhaustive",
        )
        assert code == EXIT_GUARD
        assert "guard exceeded" in err

    def test_seed_repeatability(self, capsys):
        argv = [
            "simulate", "--n", "3", "--p", "5", "--x", "3", "--y", "1", "--a", "2",
            "--t", "4", "--trials", "100", "--seed", "5", "--json",
        ]
        _, out1, _ = run_cli(capsys, *argv)
        _, out2, _ = run_cli(capsys, *argv)
        assert out1 == out2


class TestParser:
    def test_unknown_command(self, capsys):
        assert run_cli(capsys, "frobnicate")[0] == EXIT_USAGE

    def test_no_command(self, capsys):
        assert run_cli(capsys)[0] == EXIT_USAGE

    def test_help_exits_zero(self, capsys):
        assert run_cli(capsys, "--help")[0] == EXIT_OK

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "tcc", "verify", "--p-max", "2", "--n-max", "2"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "summary" in proc.stdout

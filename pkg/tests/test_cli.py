import json
import subprocess
import sys

from thetachi.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_all_theorems(capsys):
    code, out, _ = run_cli(
        capsys, "eval", "--n", "1", "--v", "1,0,-1", "--w", "2,3,2", "--theorem", "all"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["results"]["main"]["value"] == "9"
    assert payload["results"]["two"]["value"] == "9"
    assert payload["results"]["three"]["value"] == "1"
    assert payload["d_v"] == "1" and payload["d_w"] == "5"
    assert payload["admissibility"]["v"]["primitive"] is True
    assert "conventions" in payload


def test_eval_degenerate_branch_metadata(capsys):
    code, out, _ = run_cli(
        capsys, "eval", "--n", "2", "--v", "2,1,1", "--w", "2,1,-3", "--theorem", "main"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["results"]["main"]["branch"] == "special_dv0"
    assert payload["results"]["main"]["cross_check"] == {"r^2": "4"}


def test_eval_non_orthogonal_exits_2(capsys):
    code, _, err = run_cli(capsys, "eval", "--n", "1", "--v", "1,0,-1", "--w", "2,4,3")
    assert code == 2
    assert "chi(v (x) w) = 1" in err


def test_eval_malformed_vector_exits_2(capsys):
    code, _, err = run_cli(capsys, "eval", "--n", "1", "--v", "1,0", "--w", "2,3,2")
    assert code == 2
    assert "r,k,chi" in err


def test_eval_verbose_banner(capsys):
    code, _, err = run_cli(
        capsys, "eval", "--n", "1", "--v", "1,0,-1", "--w", "2,3,2", "--verbose"
    )
    assert code == 0
    assert "conventions in use" in err


def test_eval_all_with_undefined_theorem_reports_error_field(capsys):
    # d_v = 0 pair: theorem three is outside its domain but main/two evaluate
    code, out, _ = run_cli(
        capsys, "eval", "--n", "2", "--v", "2,1,1", "--w", "2,1,-3"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["results"]["main"]["value"] == "4"
    assert payload["results"]["two"]["value"] == "1"
    assert "error" in payload["results"]["three"]


def test_enumerate_csv_and_determinism(tmp_path, capsys):
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["enumerate", "--n", "1", "--max-rank", "2", "--max-k", "3",
            "--max-chi", "4", "--format", "csv"]
    assert main(args + ["--out", str(out1)]) == 0
    assert main(args + ["--out", str(out2)]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()
    text = out1.read_text()
    lines = text.splitlines()
    assert lines[0].startswith("n,v_r,v_k,v_chi")
    assert any(line.startswith("1,1,0,-1,2,3,2,1,5,9,9,1") for line in lines)


def test_enumerate_json_format(tmp_path, capsys):
    out = tmp_path / "pairs.json"
    code = main(["enumerate", "--n", "1", "--max-rank", "1", "--max-k", "1",
                 "--max-chi", "2", "--format", "json", "--out", str(out)])
    capsys.readouterr()
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["summary"]["nonintegral_rows"] == []
    for row in payload["rows"]:
        for field in ("n", "d_v", "d_w"):
            assert isinstance(row[field], str)


def test_enumerate_zero_bounds(tmp_path, capsys):
    out = tmp_path / "empty.csv"
    code = main(["enumerate", "--n", "1", "--max-rank", "0", "--max-k", "1",
                 "--max-chi", "1", "--out", str(out)])
    capsys.readouterr()
    assert code == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 2  # header + summary line
    assert "pairs=0" in lines[1]


def test_enumerate_unwritable_path(capsys):
    code = main(["enumerate", "--n", "1", "--max-rank", "1", "--max-k", "1",
                 "--max-chi", "1", "--out", "/nonexistent-dir/x.csv"])
    captured = capsys.readouterr()
    assert code == 2
    assert "cannot write" in captured.err


def test_verify_subset_and_exit_code(capsys):
    code, out, err = run_cli(capsys, "verify", "--only", "sec4_lemma", "--trials", "2",
                             "--seed", "1")
    assert code == 0
    reports = json.loads(out)  # stdout is a pure JSON array
    assert len(reports) == 3  # one symbolic + two numeric
    assert {rep["mode"] for rep in reports} == {"symbolic", "numeric"}
    assert all(rep["pass"] for rep in reports)
    assert "3/3 passed" in err


def test_verify_symbolic_only_run(capsys):
    code, out, _ = run_cli(capsys, "verify", "--only", "llp", "--trials", "0")
    assert code == 0
    reports = json.loads(out)
    assert [rep["mode"] for rep in reports] == ["symbolic"]


def test_verify_failure_exit_code(capsys):
    import thetachi.abelian as abelian

    abelian.PHI_HAT_SIGN = -1
    abelian._fm_kernel.cache_clear()
    try:
        code, out, err = run_cli(capsys, "verify", "--only", "fmtl", "--trials", "1")
    finally:
        abelian.PHI_HAT_SIGN = 1
        abelian._fm_kernel.cache_clear()
    assert code == 1
    assert not any(rep["pass"] for rep in json.loads(out))


def test_verify_unknown_identity_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "--only", "not_a_check")
    assert code == 2
    assert "unknown identities" in err


def test_verify_deterministic_stdout(capsys):
    code1, out1, _ = run_cli(capsys, "verify", "--only", "fmp", "--trials", "3",
                             "--seed", "5")
    code2, out2, _ = run_cli(capsys, "verify", "--only", "fmp", "--trials", "3",
                             "--seed", "5")
    assert code1 == code2 == 0
    assert out1 == out2


def test_kummer_output(capsys):
    code, out, _ = run_cli(capsys, "kummer", "--n", "2", "--chiD", "3", "--r", "0")
    assert code == 0
    payload = json.loads(out)
    assert payload["kummer"]["value"] == "8"
    assert payload["pull1_residual"] == "0"
    assert "bb_cross_value" not in payload  # n < 3

    code, out, _ = run_cli(capsys, "kummer", "--n", "1", "--chiD", "7", "--r", "5")
    payload = json.loads(out)
    assert payload["kummer"]["value"] == "1"

    code, out, _ = run_cli(capsys, "kummer", "--n", "5", "--chiD", "7", "--r", "2")
    payload = json.loads(out)
    assert payload["kummer"]["value"] == str(5 * 495)
    assert "bb_cross_value" in payload


def test_kummer_bad_n(capsys):
    code, _, err = run_cli(capsys, "kummer", "--n", "0", "--chiD", "3", "--r", "0")
    assert code == 2


def test_usage_error_missing_subcommand(capsys):
    assert main([]) == 2
    capsys.readouterr()


def test_verify_negative_trials_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "--only", "llp", "--trials", "-1")
    assert code == 2
    assert "nonnegative" in err


def test_eval_single_theorem_out_of_domain_exits_2(capsys):
    # d_v = 0 pair: the Albanese-fiber formula alone is an input error
    code, _, err = run_cli(
        capsys, "eval", "--n", "2", "--v", "2,1,1", "--w", "2,1,-3",
        "--theorem", "three",
    )
    assert code == 2
    assert "d_v" in err


def test_console_script_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "thetachi.cli", "eval", "--n", "1",
         "--v", "1,0,-1", "--w", "2,3,2", "--theorem", "main"],
        capture_output=True, text=True,
    )
    assert result.returncode == 0
    assert json.loads(result.stdout)["results"]["main"]["value"] == "9"


def test_no_floats_in_interfaces(tmp_path, capsys):
    out = tmp_path / "x.json"
    main(["enumerate", "--n", "2", "--max-rank", "2", "--max-k", "2",
          "--max-chi", "3", "--format", "json", "--out", str(out)])
    capsys.readouterr()

    def assert_no_floats(node):
        if isinstance(node, dict):
            for value in node.values():
                assert_no_floats(value)
        elif isinstance(node, list):
            for value in node:
                assert_no_floats(value)
        else:
            assert not isinstance(node, float)

    assert_no_floats(json.loads(out.read_text()))

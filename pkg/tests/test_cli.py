import json
import subprocess
import sys

from qhowe.cli import main


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "qhowe.cli", *args],
        capture_output=True,
        text=True,
    )
    return proc


def test_hwv_command(capsys):
    code = main(["--n", "2", "--m", "2", "hwv", "--partition", "2,1"])
    out = capsys.readouterr().out
    assert code == 0
    assert "v(1110)" in out
    assert "2,1" in out


def test_hwv_usage_errors(capsys):
    assert main(["--n", "2", "--m", "2", "hwv", "--partition", "3,1"]) == 2
    assert main(["--n", "2", "--m", "2", "hwv", "--partition", "1,2"]) == 2
    assert main(["--n", "0", "--m", "2", "hwv", "--partition", "1"]) == 2


def test_decompose_1x1(capsys):
    code = main(["--n", "1", "--m", "1", "--json", "decompose"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    rows = report["sections"][0]["partitions"]
    assert [r["mu"] for r in rows] == ["-", "1"]
    assert sum(r["span_dim"] for r in rows) == 2


def test_verify_commutant_exit_zero():
    proc = run_cli("--n", "2", "--m", "2", "verify", "commutant")
    assert proc.returncode == 0
    assert "overall: pass" in proc.stdout


def test_exit_code_distinction():
    # usage error is 2, distinct from check failure 1
    proc = run_cli("--n", "2", "--m", "2", "hwv", "--partition", "bogus")
    assert proc.returncode == 2
    proc = run_cli("--n", "2", "--m", "9")  # missing command
    assert proc.returncode == 2


def test_cap_violation_is_usage_error(capsys):
    assert main(["--n", "5", "--m", "4", "--cap", "16", "cauchy"]) == 2


def test_all_json_deterministic(capsys):
    args = ["--n", "2", "--m", "2", "--json", "all"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    second = capsys.readouterr().out
    assert first == second
    report = json.loads(first)
    assert report["status"] == "pass"
    names = [s["section"] for s in report["sections"]]
    assert names == [
        "scalars", "clifford", "qgroup", "embeddings", "commutant",
        "braiding", "module-algebra", "decompose", "cauchy",
    ]


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = main(["--n", "1", "--m", "2", "--json", "--out", str(target), "cauchy"])
    assert code == 0
    report = json.loads(target.read_text())
    assert report["sections"][0]["status"] == "pass"


def test_explain_command(capsys):
    code = main(["--n", "2", "--m", "2", "explain", "--map", "lambda_q", "--gen", "E1"])
    out = capsys.readouterr().out
    assert code == 0
    assert "lambda_q(E1)" in out


def test_spec_q_flag(capsys):
    code = main(["--n", "1", "--m", "2", "--spec-q", "5", "--spec-q", "7/2", "--json", "decompose"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["config"]["spec_values"] == ["5", "7/2"]
    assert main(["--n", "1", "--m", "2", "--spec-q", "1", "decompose"]) == 2


def test_seed_changes_nothing_but_is_recorded(capsys):
    code = main(["--n", "1", "--m", "1", "--json", "--seed", "42", "all"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["config"]["seed"] == 42
    assert report["status"] == "pass"

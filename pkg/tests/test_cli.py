import json
import subprocess
import sys
from pathlib import Path

import pytest

from necksum.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,expected", [
    (["count", "coperiod", "--n", "4", "--k", "2", "--r", "2"], "2\n"),
    (["count", "sbar", "--n", "8", "--k", "0", "--r", "0"], "1\n"),
    (["count", "cvp", "--n", "5", "--k", "4"], "1\n"),
    (["count", "necklaces", "--n", "6"], "14\n"),
    (["enumerate", "lyndon", "--n", "5", "--k", "3"], "00111\n01011\ncount: 2\n"),
    (["enumerate", "sbar", "--n", "6", "--k", "3", "--r", "2"], "{1,2,5}\n{1,3,4}\n{3,5,6}\ncount: 3\n"),
    (["bijection", "psi", "--perm", "54213", "--k", "3"], "01011\n"),
    (["bijection", "psi-inverse", "--word", "100", "--n", "6", "--k", "2"], "651234\n"),
    (["bijection", "affine", "--n", "6", "--set", "3,5,6", "--y", "1", "--z", "-1"], "{1,2,4}\n"),
    (["table", "diff-grid", "--r", "2", "--max-m", "1", "--format", "csv"], "0,1\n"),
])
def test_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected


def test_enumerate_cvp_contains_example(capsys):
    _, out, _ = run(capsys, "enumerate", "cvp", "--n", "6", "--k", "3")
    assert "651234" in out.splitlines()


def test_zero_based_rendering(capsys):
    _, out, _ = run(capsys, "--zero-based", "enumerate", "sbar", "--n", "6", "--k", "3", "--r", "2")
    assert out.splitlines()[2] == "{0,3,5}"
    _, out2, _ = run(capsys, "enumerate", "sbar", "--n", "6", "--k", "3", "--r", "2", "--zero-based")
    assert out2 == out


def test_psi_steps(capsys):
    _, out, _ = run(capsys, "bijection", "psi", "--perm", "54213", "--k", "3", "--steps")
    assert out.splitlines() == ["01011", "cycle: (1,5,3,2,4)", "cycle word: 10110"]
    _, out, _ = run(capsys, "bijection", "psi-inverse", "--word", "10110", "--n", "5", "--k", "3", "--table")
    assert "11011" in out


def test_tables_match_golden(capsys):
    _, out, _ = run(capsys, "table", "diff-grid", "--format", "csv")
    assert out == (GOLDEN / "diff_grid.csv").read_text()
    _, out, _ = run(capsys, "--jobs", "2", "table", "diff-sum", "--format", "csv")
    assert out == (GOLDEN / "diff_sum.csv").read_text()


def test_table_json(capsys):
    _, out, _ = run(capsys, "table", "diff-grid", "--max-m", "2", "--format", "json")
    assert json.loads(out) == {"rows": [{"m": 1, "values": [0, 1]}, {"m": 2, "values": [0, 1, -1]}]}


@pytest.mark.parametrize("argv,code", [
    (["count", "lyndon", "--n", "3", "--k", "9"], 2),
    (["count", "coperiod", "--n", "4"], 2),
    (["count", "bogus", "--n", "4"], 2),
    (["table", "diff-grid", "--max-m", "0"], 2),
    (["scan-qary", "--max-n", "1"], 2),
    (["verify", "theorem", "--max-n", "0"], 2),
    (["bijection", "psi", "--perm", "12345", "--k", "3"], 3),
    (["bijection", "psi-inverse", "--word", "0101", "--n", "4", "--k", "2"], 3),
    (["bijection", "affine", "--n", "6", "--set", "1,2", "--y", "0", "--z", "2"], 3),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_domain_error_names_code(capsys):
    _, _, err = run(capsys, "bijection", "psi", "--perm", "12345", "--k", "3")
    assert "NOT_CYCLIC" in err


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "all", "--max-n", "9", "--deep")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_verify_failure_exit(capsys, monkeypatch):
    from necksum import verify
    from necksum.identities import Report

    def broken(max_n, deep=False):
        rep = Report("theorem")
        for i in range(30):
            rep.expect(False, f"bad {i}")
        return rep

    monkeypatch.setattr(verify, "theorem", broken)
    code, out, _ = run(capsys, "verify", "theorem")
    assert code == 1
    assert "bad 19" in out and "bad 20" not in out


def test_scan_qary_csv(capsys):
    code, out, err = run(capsys, "scan-qary", "--max-n", "3", "--max-q", "3")
    assert code == 0
    assert out.startswith("n,q,k,r,count_multisets,count_necklaces,equal,conditions\n")
    assert err == ""


def test_byte_determinism_across_processes():
    cmd = [sys.executable, "-m", "necksum", "--format", "json", "scan-qary", "--max-n", "4", "--max-q", "3"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd + ["--jobs", "2"], capture_output=True, check=True).stdout
    assert first == second
    usage = subprocess.run([sys.executable, "-m", "necksum", "count"], capture_output=True)
    assert usage.returncode == 2

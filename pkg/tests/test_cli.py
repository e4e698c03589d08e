import json
import subprocess
import sys
from pathlib import Path

import pytest

from deformed_stirling.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv,golden",
    [
        (["table", "--box", "so3", "--n", "4"], "table_so3_n4.json"),
        (["table", "--box", "so21", "--n", "4", "--format", "csv"], "table_so21_n4.csv"),
        (["table", "--box", "symbolic", "--n", "4", "--format", "latex"], "table_symbolic_n4.tex"),
        (["gen22", "--n", "2"], "gen22_n2.json"),
        (["seed-paper-tables"], "paper_tables.json"),
    ],
)
def test_golden_outputs(capsys, argv, golden):
    code, out, _ = run_cli(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_so3_json_entry(capsys):
    _, out, _ = run_cli(capsys, "table", "--box", "so3", "--n", "4", "--format", "json")
    doc = json.loads(out)
    assert doc["entries"]["P_4_2"] == "7*N^2 - 19*N + 13"
    assert doc["route"] == "recurrence" and doc["nmax"] == 4 and doc["box"] == "so3"


@pytest.mark.parametrize("route", ["recurrence", "ogf", "explicit"])
def test_routes_give_same_entries(capsys, route):
    _, out, _ = run_cli(capsys, "table", "--box", "N^2", "--n", "5", "--route", route)
    doc = json.loads(out)
    _, ref, _ = run_cli(capsys, "table", "--box", "N^2", "--n", "5")
    assert doc["entries"] == json.loads(ref)["entries"]


def test_constant_box_explicit_is_usage_error(capsys):
    code, out, err = run_cli(capsys, "table", "--box", "5", "--n", "3", "--route", "explicit")
    assert code == 2
    assert "DegenerateBox" in err
    assert out == ""


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "--box", "N/(N-1)", "--n", "3"],
        ["table", "--box", "N^-1", "--n", "3"],
        ["table", "--box", "so3", "--n", "0"],
        ["table", "--box", "so3", "--n", "65"],
        ["table", "--box", "symbolic", "--n", "3", "--route", "explicit"],
        ["verify", "--box", "so3"],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run_cli(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["table", "--box", "so3", "--n", "3", "--format", "xml"])
    assert info.value.code == 2


@pytest.mark.parametrize("box,n", [("so21", 5), ("symbolic", 6), ("N*N", 4)])
def test_verify_passes(capsys, box, n):
    code, out, _ = run_cli(capsys, "verify", "--box", box, "--n", str(n))
    report = json.loads(out)
    assert code == 0 and report["passed"]
    assert {c["name"] for c in report["checks"]} == {"ogf_vs_recurrence", "explicit_vs_recurrence", "oracle_vs_recurrence"}


def test_verify_constant_box_skips_explicit(capsys):
    code, out, _ = run_cli(capsys, "verify", "--box", "5", "--n", "3")
    checks = {c["name"]: c["status"] for c in json.loads(out)["checks"]}
    assert code == 0 and checks["explicit_vs_recurrence"] == "skipped"


def test_verify_catches_corrupted_table(capsys, tmp_path):
    doc = json.loads((GOLDEN / "table_so3_n4.json").read_text())
    doc["entries"]["P_2_1"] = "0"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run_cli(capsys, "verify", "--table", str(path))
    report = json.loads(out)
    assert code == 1 and not report["passed"]
    checks = {c["name"]: c for c in report["checks"]}
    assert checks["table_vs_recurrence"]["mismatches"] == ["P_2_1"]
    assert checks["oracle_vs_table"]["mismatches"] == ["P_2_1"]


def test_verify_accepts_good_table(capsys):
    code, out, _ = run_cli(capsys, "verify", "--table", str(GOLDEN / "table_so3_n4.json"))
    assert code == 0 and json.loads(out)["passed"]


def test_verify_incomplete_table_is_usage_error(capsys, tmp_path):
    doc = json.loads((GOLDEN / "table_so3_n4.json").read_text())
    del doc["entries"]["P_3_2"]
    path = tmp_path / "partial.json"
    path.write_text(json.dumps(doc))
    code, _, _ = run_cli(capsys, "verify", "--table", str(path))
    assert code == 2


def test_gen22_realization(capsys):
    code, out, _ = run_cli(capsys, "gen22", "--n", "3", "--check-realization")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert all(r["identity"] and r["table"] for r in doc["realization"])
    assert doc["rows"][0]["values"] == {"2": {"enumeration": 1, "formula": 1, "oracle": 1, "via_s11": 1}}


def test_gen22_beyond_enumeration_bound(capsys):
    code, out, _ = run_cli(capsys, "gen22", "--n", "6", "--format", "csv")
    assert code == 0
    last = out.strip().splitlines()[-1]
    assert last == "6,12,1,1,1,"


def test_out_file(capsys, tmp_path):
    target = tmp_path / "t.csv"
    code, out, _ = run_cli(capsys, "table", "--box", "canonical", "--n", "3", "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[-2] == "3,2,3"


def test_deterministic_subprocess():
    cmd = [sys.executable, "-m", "deformed_stirling", "table", "--box", "symbolic", "--n", "5"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first

"""CLI behavior: reports, exit codes, witness round trips, stable JSON."""

from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from ptfkit import all_vectors, evaluate, parse_table
from ptfkit.cli import run
from ptfkit.ptf import parse_ptf_text
from ptfkit.ptf import evaluate as eval_ptf

TESTS_DIR = Path(__file__).parent

GOLDEN_CASES = [
    (["analyze", "0110"], "analyze_xor2.json"),
    (["analyze", "0111"], "analyze_or2.json"),
    (["analyze", "0001"], "analyze_and2.json"),
    (["reduce", "0110", "--at", "11"], "reduce_xor2_at11.json"),
    (["extend", "0110", "fixtures/or2.ptf", "fixtures/and2.ptf"], "extend_xor2.json"),
    (["asummable", "0110", "--m", "2"], "asummable_xor2.json"),
    (["asummable", "0001", "--m", "4"], "asummable_and2.json"),
]


def run_json(args, capsys) -> tuple[int, str]:
    code = run(["--json", *args])
    return code, capsys.readouterr().out


def test_analyze_xor2(capsys):
    code, out = run_json(["analyze", "0110"], capsys)
    assert code == 0
    result = json.loads(out)["result"]
    assert result["n"] == 2
    assert result["order"] == 2
    assert result["is_threshold"] is False


def test_analyze_and2(capsys):
    code, out = run_json(["analyze", "0001"], capsys)
    assert code == 0
    result = json.loads(out)["result"]
    assert result["order"] == 1
    assert result["witness"] is not None


def test_reduce_xor2(capsys):
    code, out = run_json(["reduce", "0110", "--at", "11"], capsys)
    assert code == 0
    result = json.loads(out)["result"]
    assert result["f2"] == "0111"
    assert result["f1"] == "0001"


def test_hov_lists_all_flip_points(capsys):
    code, out = run_json(["hov", "0110"], capsys)
    assert code == 0
    result = json.loads(out)["result"]
    assert len(result["high_order_vectors"]) == 4
    assert all(entry["s"] == 1 for entry in result["high_order_vectors"])


def test_family_from_weights_file(capsys, monkeypatch):
    monkeypatch.chdir(TESTS_DIR)
    code, out = run_json(["family", "fixtures/w11.weights"], capsys)
    assert code == 0
    result = json.loads(out)["result"]
    assert [m["table"] for m in result["members"]] == ["1111", "0111", "0001", "0000"]


def test_synth_mtf(capsys):
    code, out = run_json(["synth-mtf", "0110", "--k-max", "2"], capsys)
    assert code == 0
    result = json.loads(out)["result"]
    assert result["found"] is True
    assert result["rep"]["thresholds"] == ["1", "2"]


def test_eval_ptf_file(capsys, monkeypatch):
    monkeypatch.chdir(TESTS_DIR)
    code, out = run_json(["eval", "fixtures/or2.ptf", "--at", "10"], capsys)
    assert code == 0
    assert json.loads(out)["result"] == {"kind": "ptf", "at": [1, 0], "value": 1}


def test_eval_shared_weight_json(tmp_path, capsys):
    rep_file = tmp_path / "rep.json"
    rep_file.write_text(
        json.dumps({"n": 2, "weights": {"1": "1", "2": "1"}, "thresholds": ["1", "2"]})
    )
    code, out = run_json(["eval", str(rep_file), "--at", "11"], capsys)
    assert code == 0
    assert json.loads(out)["result"]["value"] == 0


def test_eval_xor_list_json(tmp_path, capsys):
    rep_file = tmp_path / "xorlist.json"
    rep_file.write_text(
        json.dumps(["1: 1\n2: 1\ntheta: 1\n", "1: 1\n2: 1\ntheta: 2\n"])
    )
    bits = []
    for at in ("00", "10", "01", "11"):
        code, out = run_json(["eval", str(rep_file), "--at", at], capsys)
        assert code == 0
        bits.append(json.loads(out)["result"]["value"])
    assert bits == [0, 1, 1, 0]


def test_parse_error_exits_1(capsys):
    assert run(["analyze", "01x0"]) == 1
    assert "error" in capsys.readouterr().err


def test_family_rejects_theta_line(tmp_path, capsys):
    weights = tmp_path / "w.weights"
    weights.write_text("1: 1\n2: 1\ntheta: 1\n")
    assert run(["family", str(weights)]) == 1
    assert "theta" in capsys.readouterr().err


def test_precondition_error_exits_2(capsys):
    # reducing a function of order <= 1 violates the reduction precondition
    assert run(["reduce", "0001", "--at", "11"]) == 2
    assert "precondition" in capsys.readouterr().err


def test_extend_mismatched_components_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.ptf"
    bad.write_text("1: 2\n2: 1\ntheta: 1\n")
    good = tmp_path / "good.ptf"
    good.write_text("1: 1\n2: 1\ntheta: 2\n")
    assert run(["extend", "0110", str(bad), str(good)]) == 2
    capsys.readouterr()


def _ptf_witness_text(witness: dict) -> str:
    lines = [f"{mon}: {coeff}" for mon, coeff in witness["coeffs"].items()]
    return "\n".join(lines) + f"\ntheta: {witness['theta']}\n"


def _eval_file_everywhere(path: Path, n: int, capsys) -> str:
    bits = []
    for X in all_vectors(n):
        code = run(["--json", "eval", str(path), "--at", "".join(map(str, X))])
        assert code == 0
        bits.append(str(json.loads(capsys.readouterr().out)["result"]["value"]))
    return "".join(bits)


def test_analyze_witness_round_trips_through_eval(capsys):
    for table in ("0110", "0111", "0001", "01101001"):
        f = parse_table(table)
        code, out = run_json(["analyze", table], capsys)
        assert code == 0
        witness = json.loads(out)["result"]["witness"]
        p = parse_ptf_text(_ptf_witness_text(witness), n=f.n)
        for X in all_vectors(f.n):
            assert eval_ptf(p, X) == evaluate(f, X)


def test_reduce_witnesses_round_trip_through_eval(tmp_path, capsys):
    code, out = run_json(["reduce", "0110", "--at", "11"], capsys)
    assert code == 0
    result = json.loads(out)["result"]
    for part in ("f1", "f2"):
        path = tmp_path / f"{part}.ptf"
        path.write_text(_ptf_witness_text(result[f"{part}_witness"]))
        assert _eval_file_everywhere(path, 2, capsys) == result[part]


def test_extend_witness_round_trips_through_eval(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(TESTS_DIR)
    code, out = run_json(
        ["extend", "0110", "fixtures/or2.ptf", "fixtures/and2.ptf"], capsys
    )
    assert code == 0
    result = json.loads(out)["result"]
    path = tmp_path / "witness.json"
    path.write_text(json.dumps(result["witness"]))
    assert _eval_file_everywhere(path, 3, capsys) == result["f_next"]


def test_synth_rep_round_trips_through_eval(tmp_path, capsys):
    code, out = run_json(["synth-mtf", "01101001", "--k-max", "3"], capsys)
    assert code == 0
    result = json.loads(out)["result"]
    path = tmp_path / "rep.json"
    path.write_text(json.dumps(result["rep"]))
    assert _eval_file_everywhere(path, 3, capsys) == "01101001"


def test_json_reports_have_no_timing_field(capsys):
    _, out = run_json(["analyze", "0110"], capsys)
    assert "elapsed_ms" not in json.loads(out)


def test_human_report_includes_timing(capsys):
    assert run(["analyze", "0110"]) == 0
    out = capsys.readouterr().out
    assert "elapsed_ms" in out


@pytest.mark.parametrize("args,golden", GOLDEN_CASES)
def test_golden_reports_byte_stable(args, golden, capsys, monkeypatch):
    monkeypatch.chdir(TESTS_DIR)
    code, first = run_json(args, capsys)
    assert code == 0
    code, second = run_json(args, capsys)
    assert code == 0
    assert first == second
    assert first == (TESTS_DIR / "golden" / golden).read_text(encoding="utf-8")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ptfkit.cli", "--json", "analyze", "0110"],
        capture_output=True,
        text=True,
        cwd=TESTS_DIR,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["order"] == 2

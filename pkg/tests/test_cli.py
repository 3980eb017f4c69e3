import json

import pytest

from zdmd.cli import main, parse_range
from zdmd.graph import from_json, to_json
from zdmd.ring import zero_divisor_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_range():
    assert parse_range("2..5") == [2, 3, 4, 5]
    assert parse_range("7") == [7]
    assert parse_range("3,5..7") == [3, 5, 6, 7]


def test_zdg_dot(capsys):
    code, out, _ = run(capsys, "zdg", "6", "--format", "dot")
    assert code == 0
    assert "2 -- 3;" in out and "3 -- 4;" in out


def test_zdg_empty_and_usage(capsys):
    code, out, _ = run(capsys, "zdg", "7")
    assert code == 0 and "empty graph" in out
    with pytest.raises(SystemExit) as exc:
        main(["zdg", "1"])
    assert exc.value.code == 2


def test_bs_outputs(capsys):
    _, out, _ = run(capsys, "bs", "15", "--format", "json")
    data = json.loads(out)
    assert data["n"] == 14 and len(data["edges"]) == 16
    assert "a_1" in data["labels"].values()
    _, out, _ = run(capsys, "bs", "77", "--format", "dot")
    assert len([l for l in out.splitlines() if "--" in l]) == 120
    _, out, _ = run(capsys, "bs", "4")
    assert out.startswith("BS(Γ(Z_4)): 1 vertices, 0 edges")


def test_md_examples(capsys):
    code, out, _ = run(capsys, "md", "--n", "35", "--mode", "exhaustive")
    assert code == 0 and out.startswith("exact 6")
    code, out, _ = run(capsys, "md", "--n", "15", "--mode", "bnb", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["exact"] and data["lower"] == 3
    assert len(data["certificate"]["codes"]) == 14


def test_md_path_file(capsys, tmp_path):
    f = tmp_path / "path.json"
    f.write_text(json.dumps({"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4]]}))
    code, out, _ = run(capsys, "md", "--file", str(f))
    assert code == 0 and out.startswith("exact 1")


def test_md_disconnected(capsys, tmp_path):
    f = tmp_path / "g.json"
    f.write_text(json.dumps({"n": 4, "edges": [[0, 1], [2, 3]]}))
    code, _, err = run(capsys, "md", "--file", str(f))
    assert code == 1 and "disconnected" in err


def test_md_budget_and_bounds(capsys, monkeypatch):
    code, out, _ = run(capsys, "md", "--n", "77", "--mode", "bounds")
    assert code == 2 and out.startswith("bounds 9..")
    code, out, _ = run(capsys, "md", "--n", "33", "--mode", "exhaustive", "--budget", "10")
    assert code == 2 and "budget exhausted" in out
    monkeypatch.setenv("ZDMD_BUDGET", "10")
    code, out, _ = run(capsys, "md", "--n", "33", "--mode", "exhaustive")
    assert code == 2
    assert main(["md", "--n", "15", "--budget", "0"]) == 2


def test_verify_z77(capsys):
    code, out, _ = run(capsys, "verify", "--p", "7", "--q", "11", "--mode", "fast")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "p,q,check,status,detail"
    assert sum(1 for l in lines if ",code[" in l) == 66
    assert all(",fail," not in l for l in lines)


def test_verify_strict_note(capsys):
    code, out, _ = run(capsys, "verify", "--p", "11", "--q", "13")
    assert code == 0
    assert "strict_inequality,skip" in out
    assert "family_bound_A,pass" in out


def test_verify_errors(capsys, tmp_path):
    code, _, err = run(capsys, "verify", "--p", "4", "--q", "6")
    assert code == 2 and "no prime pairs" in err
    out_file = tmp_path / "r.csv"
    code, _, err = run(capsys, "verify", "--p", "3", "--q", "7", "--mode", "full",
                       "--budget", "3", "--out", str(out_file))
    assert code == 1 and "FAILED" in err
    assert ",budget," in out_file.read_text()


def test_json_export_round_trip(capsys):
    _, out, _ = run(capsys, "zdg", "12", "--format", "json")
    g = from_json(out)
    assert g.adj == zero_divisor_graph(12).adj
    assert from_json(to_json(g)).adj == g.adj


def test_corpus_command(capsys):
    code, out, _ = run(capsys, "corpus", "--graphs", "10", "--trees", "5", "--seed", "3")
    assert code == 0 and out.splitlines()[0] == "seed 3" and out.strip().endswith("ok")

import json
import subprocess
import sys

import pytest

from supersym import superpoly
from supersym.cli import main

BIG_ENTRIES = "{{1,1,2},{1,3},{1,3},{1,3},{1,3},{1,3},{1,1'},{1,1'},{1,1',2'},{1,1',2'},{2,2},{1'},{1'},{1'},{1'}}"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_decompose_sign_module(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "2", "--m", "0", "--m-bar", "1", "--beta", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert {tuple(r["shape"]): r["multiplicity"] for r in data["multiplicities"]} == {(2,): 0, (1, 1): 1}


@pytest.mark.parametrize("method", ["tableaux", "symbolic", "brute"])
def test_decompose_methods(capsys, method):
    code, out, _ = run(capsys, "decompose", "--n", "2", "--m", "1", "--alpha", "1", "--method", method)
    assert code == 0
    assert out.split("\n")[:2] == ["[2]: 1", "[1, 1]: 1"]


def test_decompose_check(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "3", "--alpha", "2,1", "--beta", "1", "--check")
    assert code == 0 and "all methods agree" in out


def test_decompose_entries(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "24", "--shape", "10,8,5,1", "--entries", BIG_ENTRIES)
    assert code == 0 and out.strip() == "3"


def test_tableaux_listing(capsys):
    code, out, _ = run(capsys, "tableaux", "--shape", "2", "--alpha", "1")
    assert code == 0
    assert out.strip() == "| |1|\n(1 tableaux)"
    code, out, _ = run(capsys, "tableaux", "--shape", "2", "--beta", "2", "--format", "json")
    assert code == 0 and json.loads(out)["tableaux"] == []


def test_tableaux_validate(capsys, tmp_path):
    good = tmp_path / "good.json"
    good.write_text(json.dumps({
        "shape": [7, 3, 2, 2, 1],
        "rows": [
            ["{}", "{}", "{2}", "{2}", "{1',2'}", "{1',2'}", "{2'}"],
            ["{1,1'}", "{2}", "{1',2'}"],
            ["{1,1'}", "{2'}"],
            ["{1,1'}", "{2'}"],
            ["{2}"],
        ],
    }))
    code, out, _ = run(capsys, "tableaux", "--validate", str(good))
    assert code == 0 and out.strip() == "ok"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"shape": [2], "rows": [["{1'}", "{1'}"]]}))
    code, out, _ = run(capsys, "tableaux", "--validate", str(bad))
    assert code == 1 and "condition 4" in out


def test_invariants_commands(capsys):
    assert run(capsys, "invariants", "count", "--n", "2", "--alpha", "2")[:2] == (0, "2\n")
    assert run(capsys, "invariants", "reduce", "--n", "1", "--S", "{1,1}")[:2] == (0, "p{1}*p{1}\n")
    code, out, _ = run(capsys, "invariants", "relations", "--n", "2", "--max-size", "2")
    assert code == 0 and out.startswith("all hold")
    code, out, _ = run(capsys, "invariants", "span", "--n", "2", "--alpha", "2,0", "--beta", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["rank"] == data["dimension"]


def test_usage_errors(capsys):
    code, _, err = run(capsys, "invariants", "reduce", "--n", "2", "--S", "{1,1}")
    assert code == 2 and "no relation" in err
    assert run(capsys, "decompose", "--alpha", "1")[0] == 2
    assert run(capsys, "decompose", "--n", "2", "--m", "2", "--alpha", "1")[0] == 2
    assert run(capsys, "decompose", "--n", "2", "--alpha", "x")[0] == 2
    assert run(capsys, "tableaux", "--validate", "/nonexistent.json")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["decompose", "--method", "nope"])
    assert exc.value.code == 2


def test_brute_cap(capsys):
    code, _, err = run(capsys, "decompose", "--n", "4", "--alpha", "4,4", "--method", "brute", "--cap", "10")
    assert code == 2 and "cap" in err
    code, out, _ = run(capsys, "decompose", "--n", "3", "--alpha", "2", "--check", "--cap", "1")
    assert code == 0 and "all methods agree" in out


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# component\nn = 2\nm-bar = 1\nbeta = 2\nformat = json\n")
    code, out, _ = run(capsys, "decompose", "--config", str(cfg))
    assert code == 0 and json.loads(out)["beta"] == [2]
    code, out, _ = run(capsys, "decompose", "--config", str(cfg), "--format", "text")
    assert code == 0 and out.startswith("[2]: 0")


def test_verify_small_grid(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "3", "--max-degree", "3", "--max-k", "4")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 6 and all(line.startswith("PASS") for line in lines)


def test_verify_negative_control(capsys, monkeypatch):
    # forget the reordering sign of Grassmann variables
    monkeypatch.setattr(superpoly, "_sort_sign", lambda seq: (1, tuple(sorted(seq))) if len(set(seq)) == len(seq) else (0, ()))
    superpoly._trace.cache_clear()
    try:
        code, out, _ = run(capsys, "verify", "--max-n", "2", "--suite", "multiplicities", "--format", "json")
    finally:
        superpoly._trace.cache_clear()
    data = json.loads(out)
    assert code == 1 and data["failed"] > 0
    first = data["suites"][0]["failures"][0]
    assert "n=2" in first and "brute=" in first


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "supersym", "invariants", "count", "--n", "1", "--alpha", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"

import json
import subprocess
import sys

import pytest

from sumprod.cli import EXIT_BUDGET, EXIT_CONFIG, EXIT_GUARD, EXIT_OK, main
from sumprod.harness import rows_from_csv, rows_from_json


def write(tmp_path, obj, name="cfg.json"):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


EXPANSION = {
    "experiment": "expansion",
    "group": "Gm",
    "correspondences": [{"kind": "graph", "phi": "x+1", "source": "Gm", "target": "Ga"}],
    "g": 2,
    "set": {"kind": "gp", "start": "1", "ratio": "2"},
    "sizes": [10],
    "timing": False,
}


def test_expansion_json_to_file(tmp_path):
    out = tmp_path / "rep.json"
    assert main(["expansion", "--config", write(tmp_path, EXPANSION), "--out", str(out)]) == EXIT_OK
    (row,) = rows_from_json(out.read_text())
    assert row.result == 55


def test_csv_to_stdout(tmp_path, capsys):
    assert main(["expansion", "--config", write(tmp_path, EXPANSION), "--format", "csv"]) == EXIT_OK
    (row,) = rows_from_csv(capsys.readouterr().out)
    assert row.result == 55


def test_output_path_from_config(tmp_path):
    out = tmp_path / "from_cfg.csv"
    cfg = {**EXPANSION, "output": str(out), "format": "csv"}
    assert main(["expansion", "--config", write(tmp_path, cfg)]) == EXIT_OK
    assert rows_from_csv(out.read_text())[0].result == 55


def test_guard_refusal_exit_code(tmp_path):
    cfg = {**EXPANSION, "correspondences": [{"kind": "graph", "phi": "x^2", "source": "Gm", "target": "Gm"}]}
    assert main(["expansion", "--config", write(tmp_path, cfg)]) == EXIT_GUARD
    er = {
        "group": "Gm",
        "polynomial": "x2*x3 - x1 + 1",
        "set": {"kind": "explicit", "elements": [1, 2, 3]},
    }
    assert main(["elekes_ronyai", "--config", write(tmp_path, er)]) == EXIT_GUARD


def test_budget_exit_code(tmp_path):
    cfg = {
        "group": "Gm",
        "variety": {"equations": ["x1 - x2"], "dim": 1},
        "set": {"kind": "gp"},
        "sizes": [40],
    }
    assert main(["eszabo", "--config", write(tmp_path, cfg), "--budget", "100"]) == EXIT_BUDGET
    assert main(["eszabo", "--config", write(tmp_path, cfg)]) == EXIT_OK


@pytest.mark.parametrize(
    "cfg",
    [
        {"group": "Gm"},
        {**EXPANSION, "group": "Gq"},
        {**EXPANSION, "experiment": "eszabo"},
        {**EXPANSION, "set": {"kind": "gp", "start": "x"}},
    ],
)
def test_malformed_config_exit_code(tmp_path, cfg):
    assert main(["expansion", "--config", write(tmp_path, cfg)]) == EXIT_CONFIG


def test_unreadable_config(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["expansion", "--config", str(bad)]) == EXIT_CONFIG
    assert main(["expansion", "--config", str(tmp_path / "missing.json")]) == EXIT_CONFIG


def test_patterns_and_degeneracy(tmp_path, capsys):
    assert main(["patterns", "--config", write(tmp_path, [1, 9, 25, "49"])]) == EXIT_OK
    reports = json.loads(capsys.readouterr().out)
    assert [r["kind"] for r in reports] == ["AP", "GP", "SquareAP"]
    assert reports[2] == {"kind": "SquareAP", "length": 4, "witness": ["1/1", "2/1"]}
    cfg = {"polynomials": ["x*y + y*z + z*x", "x + y"]}
    assert main(["degeneracy", "--config", write(tmp_path, cfg)]) == EXIT_OK
    a, b = json.loads(capsys.readouterr().out)
    assert a["ga_vector"] is None and not a["gm_degenerate"]
    assert b["ga_vector"] == ["1/1", "-1/1"]


def test_threads_flag_matches_serial(tmp_path, capsys):
    cfg = {**EXPANSION, "sizes": [40]}
    path = write(tmp_path, cfg)
    main(["expansion", "--config", path])
    serial = capsys.readouterr().out
    main(["expansion", "--config", path, "--threads", "2"])
    assert capsys.readouterr().out == serial


def test_console_script_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "sumprod.cli", "expansion", "--config", write(tmp_path, EXPANSION)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert rows_from_json(proc.stdout)[0].result == 55

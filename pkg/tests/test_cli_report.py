import io
import json

import pytest

from supercas.cli_report import main
from supercas.superlinalg import load_matrix


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def test_degenerate_instance_exit_code(capsys):
    code, _ = run(["verify", "--algebra", "osp", "--M", "4", "--N", "2"])
    assert code == 2
    assert "omega=2: Killing metric degenerate" in capsys.readouterr().err


def test_usage_errors(capsys):
    assert run(["verify", "--algebra", "osp", "--M", "5"])[0] == 2
    assert run(["dims", "--algebra", "gl", "--M", "2", "--N", "1"])[0] == 2
    assert run(["rmatrix", "--algebra", "sl", "--M", "3", "--N", "1", "--u", "1"])[0] == 2
    assert run(["series", "--algebra", "sl", "--M", "3", "--N", "1", "--order", "-1"])[0] == 2
    capsys.readouterr()


def test_dims_table_sl41():
    code, text = run(["dims", "--algebra", "sl", "--M", "4", "--N", "1"])
    assert code == 0
    assert "V1(+)      = (1, 0)" in text
    assert "total = 576" in text
    assert "MISMATCH" not in text


def test_dims_table_osp52():
    code, text = run(["dims", "--algebra", "osp", "--M", "5", "--N", "2"])
    assert code == 0
    assert "V3         = (1, 0)" in text
    assert "V6         = (15, 10)" in text
    assert "total = 529" in text


def test_verify_suite_json_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["verify", "--algebra", "sl", "--M", "3", "--N", "1", "--suite", "vogel"]
    assert run(argv + ["--json", str(a)])[0] == 0
    assert run(argv + ["--json", str(b)])[0] == 0
    assert a.read_text() == b.read_text()
    doc = json.loads(a.read_text())
    assert set(doc) == {"algebra", "M", "N", "omega", "checks", "dims", "series"}
    assert (doc["algebra"], doc["M"], doc["N"], doc["omega"]) == ("sl", 3, 1, 2)
    statuses = {c["status"] for c in doc["checks"]}
    assert statuses <= {"pass", "skipped"}
    assert any(c["status"] == "skipped" and "collide" in c["reason"] for c in doc["checks"])


def test_verify_projectors_writes_dims(tmp_path):
    path = tmp_path / "r.json"
    code, text = run(["verify", "--algebra", "sl", "--M", "2", "--N", "1", "--suite", "projectors",
                      "--json", str(path), "--timings"])
    assert code == 0
    doc = json.loads(path.read_text())
    assert sum(e + o for e, o in doc["dims"].values()) == 64
    assert all("elapsed_ms" in c for c in doc["checks"])
    assert "0 failed" in text


def test_verify_full_reference_instance():
    code, text = run(["verify", "--algebra", "osp", "--M", "5", "--N", "2", "--suite", "all"])
    assert code == 0
    assert "FAIL" not in text


def test_series_command():
    code, text = run(["series", "--algebra", "sl", "--M", "4", "--N", "1", "--order", "4"])
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "c_0 = 8  (universal 8)"
    assert lines[3] == "c_3 = -1/4  (universal -1/4)"


def test_rmatrix_dump_and_ybe():
    code, text = run(["rmatrix", "--algebra", "sl", "--M", "2", "--N", "1", "--u", "0"])
    assert code == 0
    R = load_matrix(text)
    assert R.shape == (9, 9)
    code, text = run(["rmatrix", "--algebra", "osp", "--M", "3", "--N", "2", "--u", "1/3", "--v", "-2/7"])
    assert code == 0
    assert "YBE: PASS" in text and "unitarity: PASS" in text


def test_dump_operator(tmp_path):
    path = tmp_path / "k.json"
    code, _ = run(["dump", "--algebra", "sl", "--M", "3", "--N", "1", "--operator", "K", "--out", str(path)])
    assert code == 0
    K = load_matrix(path.read_text())
    # str K = sdim g = w^2 - 1
    assert K.supertrace() == 3
    assert run(["dump", "--algebra", "osp", "--M", "3", "--N", "2", "--operator", "Ct_minus"])[0] == 2


def test_threads_env_runs_default_matrix_subset(monkeypatch):
    monkeypatch.setenv("SUPERCAS_THREADS", "2")
    code, text = run(["verify", "--suite", "brauer"])
    assert code == 0
    assert "osp(5|2)" in text and "sl(4|1)" in text

import json
import subprocess
import sys

import pytest

from burniat.cli import EXIT_MISMATCH, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, main
from burniat.report import SCHEMA, ClassificationReport


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv",
    [["tables", "all"], ["classify", "all"], ["pi1", "A"], ["pi1", "D"], ["verify", "--trials", "20"]],
)
def test_passing_commands(argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == EXIT_OK
    assert out


@pytest.mark.parametrize("argv", [["pi1", "E"], ["pi1", "all"]])
def test_published_mismatch_exits_one(argv, capsys):
    code, out, _ = run(argv + ["--format", "json"], capsys)
    assert code == EXIT_MISMATCH
    assert json.loads(out)["sections"]["pi1"]["ok"] is False


def test_swapped_labels(capsys):
    code, out, _ = run(["pi1", "all", "--labels", "swapped", "--format", "json"], capsys)
    cases = json.loads(out)["sections"]["pi1"]["cases"]
    assert [cid for cid, s in cases.items() if s["matches_published"]] == list("ABDEFG")
    assert code == EXIT_MISMATCH


@pytest.mark.parametrize("argv", [["verify", "--trials", "0"], ["verify", "--tol-membership", "1e-3"], ["verify", "--seed", "-1"]])
def test_usage_errors(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == EXIT_USAGE
    assert "error" in err


def test_argparse_rejects_unknown_case():
    with pytest.raises(SystemExit) as exc:
        main(["pi1", "H"])
    assert exc.value.code == EXIT_USAGE


def test_precision_error_exit(capsys):
    code, _, err = run(["verify", "--trials", "5", "--tol-band", "10"], capsys)
    assert code == EXIT_NUMERIC
    assert "ambiguity" in err


def test_json_is_byte_identical_and_roundtrips(capsys):
    argv = ["classify", "nodal4", "--format", "json"]
    _, first, _ = run(argv, capsys)
    _, second, _ = run(argv, capsys)
    assert first == second
    rep = ClassificationReport.from_json(first)
    assert rep.schema == SCHEMA
    assert rep.to_json() == first


def test_config_file_and_out(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"seed": 2, "trials": 10, "format": "json", "tol-membership": 1e-9}))
    out = tmp_path / "report.json"
    code, stdout, _ = run(["verify", "--config", str(cfg), "--out", str(out)], capsys)
    assert code == EXIT_OK and stdout == ""
    data = json.loads(out.read_text())
    assert data["config"]["seed"] == 2 and data["config"]["trials"] == 10
    assert data["config"]["tol_membership"] == 1e-9


def test_flags_override_config(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"seed": 2, "format": "json"}))
    _, out, _ = run(["tables", "G1", "--config", str(cfg), "--seed", "5"], capsys)
    assert json.loads(out)["config"]["seed"] == 5


@pytest.mark.parametrize("content", ["not json", "[1, 2]", '{"colour": 1}'])
def test_bad_config(tmp_path, capsys, content):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(content)
    code, _, _ = run(["tables", "G0", "--config", str(cfg)], capsys)
    assert code == EXIT_USAGE


def test_text_output_mentions_verdicts(capsys):
    _, out, _ = run(["classify", "primary"], capsys)
    assert "OK" in out
    _, out, _ = run(["pi1", "all"], capsys)
    assert "MISMATCH" in out


def test_report_all(capsys):
    code, out, _ = run(["report-all", "--trials", "20", "--format", "json"], capsys)
    data = json.loads(out)
    assert "ok" not in data["sections"]["pi1_swapped"]
    failing = sorted(k for k, s in data["sections"].items() if s.get("ok") is False)
    assert failing == ["pi1"]
    assert code == EXIT_MISMATCH


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "burniat.cli", "tables", "G0"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout

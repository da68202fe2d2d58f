"""Command-line surface: outputs, byte stability, exit codes."""

import json

import pytest

from qtspecials.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_binom_value(capsys):
    code, out = run_cli(capsys, "binom", "--lambda", "2,1", "--mu", "1,0",
                        "--q", "1/2", "--t", "1/3")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == "9/2"
    assert payload["lambda"] == "2,1"


def test_binom_alpha_limit(capsys):
    code, out = run_cli(capsys, "binom", "--lambda", "4,0", "--mu", "2,0",
                        "--alpha", "1")
    assert code == 0
    assert json.loads(out)["value"] == "6/1"


def test_catalan_alpha_example(capsys):
    code, out = run_cli(capsys, "catalan", "--lambda", "1,1", "--alpha", "1")
    assert code == 0
    assert json.loads(out)["values"]["1,1"] == "2/1"


def test_sequence_table_csv(capsys):
    code, out = run_cli(capsys, "fibonacci", "--bound", "2,1",
                        "--q", "1/2", "--t", "1/3", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "lambda,value"
    assert all("," in line for line in lines[1:])
    # cells are p/q strings, never decimals
    assert all("." not in line for line in lines)


def test_stirling_table_json(capsys):
    code, out = run_cli(capsys, "stirling", "--kind", "first", "--bound", "2,1",
                        "--q", "1/2", "--t", "1/3")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "first" and payload["n"] == 2
    assert payload["entries"]["2,1"]["2,1"] == "1/1"
    assert set(payload["entries"]["1,0"]) == {"0,0", "1,0"}


def test_verify_small_bound(capsys):
    code, out = run_cli(capsys, "verify", "--n", "2", "--bound", "2,1",
                        "--points", "2", "--seed", "7")
    assert code == 0
    payload = json.loads(out)
    assert payload["all_pass"] is True
    exact = {c["residual"] for c in payload["checks"] if not c["approximate"]}
    assert exact == {"0/1"}


def test_verify_rejects_mismatched_n(capsys):
    code, out = run_cli(capsys, "verify", "--n", "3", "--bound", "2,1")
    assert code == 1
    assert json.loads(out)["error"]["type"] == "ValueError"


def test_byte_stability(capsys):
    args = ("verify", "--bound", "2,0", "--points", "2", "--seed", "5")
    _, first = run_cli(capsys, *args)
    _, second = run_cli(capsys, *args)
    assert first == second
    args = ("sample", "--kind", "g", "--lambda", "2,1", "--z", "1/5",
            "--q", "1/2", "--t", "1/3", "--count", "20", "--seed", "3")
    _, first = run_cli(capsys, *args)
    _, second = run_cli(capsys, *args)
    assert first == second


def test_degenerate_point_error_record(capsys):
    code, out = run_cli(capsys, "binom", "--lambda", "2,1", "--mu", "1,0",
                        "--q", "0", "--t", "1/3")
    assert code == 1
    err = json.loads(out)["error"]
    assert err["type"] == "DegenerateParameters"


def test_parse_error_record(capsys):
    code, out = run_cli(capsys, "binom", "--lambda", "2,1", "--mu", "1,0",
                        "--q", "1/2", "--t", "x")
    assert code == 1
    assert json.loads(out)["error"]["type"] == "ValueError"


def test_density_command(capsys):
    code, out = run_cli(capsys, "density", "--kind", "g", "--lambda", "2,1",
                        "--z", "1/5", "--q", "1/2", "--t", "1/3")
    assert code == 0
    payload = json.loads(out)
    assert payload["total"] == "1/1"
    assert set(payload["masses"]) == {"0,0", "1,0", "1,1", "2,0", "2,1"}


def test_poisson_density_command(capsys):
    code, out = run_cli(capsys, "density", "--kind", "poisson", "--n", "2",
                        "--z", "1/20", "--q", "1/2", "--t", "1/3",
                        "--part-cap", "6", "--trunc", "30")
    assert code == 0
    payload = json.loads(out)
    assert "tail_bound" in payload


def test_sample_jsonl(capsys):
    code, out = run_cli(capsys, "sample", "--kind", "g", "--lambda", "2,1",
                        "--z", "1/5", "--q", "1/2", "--t", "1/3",
                        "--count", "10", "--seed", "1")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 11
    assert json.loads(lines[-1])["summary"]["count"] == 10


def test_exp_command(capsys):
    code, out = run_cli(capsys, "exp", "--z", "1/10", "--q", "1/2", "--t", "1/3",
                        "--n", "2", "--part-cap", "10", "--trunc", "25")
    assert code == 0
    payload = json.loads(out)
    assert set(payload["upper"]) == {"product", "series", "difference"}
    assert "reciprocal_residual" in payload


def test_seed_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("QTSPECIALS_SEED", "99")
    _, with_env = run_cli(capsys, "sample", "--kind", "g", "--lambda", "1,1",
                          "--z", "1/5", "--q", "1/2", "--t", "1/3",
                          "--count", "5")
    monkeypatch.delenv("QTSPECIALS_SEED")
    _, explicit = run_cli(capsys, "sample", "--kind", "g", "--lambda", "1,1",
                          "--z", "1/5", "--q", "1/2", "--t", "1/3",
                          "--count", "5", "--seed", "99")
    assert with_env == explicit


def test_out_flag(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out = run_cli(capsys, "binom", "--lambda", "1,0", "--mu", "1,0",
                        "--q", "1/2", "--t", "1/3", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["value"] == "1/1"

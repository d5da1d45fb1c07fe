"""Command-line interface: subcommands, formats, exit codes."""

import json

import pytest

from hankelpath import verify
from hankelpath.cli import (EXIT_BUDGET, EXIT_OK, EXIT_USAGE,
                            EXIT_VERIFY_FAILED, main)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_seq_plain(capsys):
    code, out, _ = run(capsys, "seq", "--ell", "1", "--t", "1", "--n", "5")
    assert code == EXIT_OK
    assert out.strip() == "1, 1, 2, 4, 9, 21"


def test_seq_json(capsys):
    code, out, _ = run(capsys, "seq", "--ell", "2", "--t", "t", "--n", "4",
                       "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out) == ["1", "0", "1+t", "0", "2+3*t+t^2"]


def test_seq_degenerate_is_usage_error(capsys):
    code, _, err = run(capsys, "seq", "--ell", "0", "--t", "1", "--n", "4")
    assert code == EXIT_USAGE
    assert "error" in err


def test_hankel_csv(capsys):
    code, out, _ = run(capsys, "hankel", "--ell", "1", "--t", "t",
                       "--n", "3", "--format", "csv")
    assert code == EXIT_OK
    assert out.splitlines() == ["n,det", "1,1", "2,1", "3,1"]


def test_hankel_json_lines_with_period(capsys):
    code, out, _ = run(capsys, "hankel", "--ell", "3", "--t", "1",
                       "--n", "42", "--detect-period", "--format", "json")
    assert code == EXIT_OK
    lines = [json.loads(line) for line in out.splitlines()]
    assert lines[0] == {"n": 1, "det": "1"}
    assert lines[-1] == {"period": 14, "offset": 0}


def test_transform_plain(tmp_path, capsys):
    fe_file = tmp_path / "fe.json"
    fe_file.write_text(json.dumps(verify.fe_ell3().to_json()))
    code, out, _ = run(capsys, "transform", "--fe", str(fe_file))
    assert code == EXIT_OK
    assert "cycle: state 5 equals state 0" in out
    assert "det H_(n-7)" in out


def test_transform_quadratic_json(tmp_path, capsys):
    form = verify.fe_motzkin().quadratic_form()
    fe_file = tmp_path / "quad.json"
    fe_file.write_text(json.dumps(form.to_json()))
    code, out, _ = run(capsys, "transform", "--fe", str(fe_file),
                       "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["cycle"] == [0, 1]


def test_transform_bad_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{\"d\": 1}")
    code, _, err = run(capsys, "transform", "--fe", str(bad))
    assert code == EXIT_USAGE
    assert err


def test_lgv_config(tmp_path, capsys):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({
        "initials": [[0, 0], [-1, 1]], "terminals": [[2, 0], [3, 1]],
        "ell": 1, "t": "t"}))
    code, out, _ = run(capsys, "lgv", "--config", str(config))
    assert code == EXIT_OK
    assert "MATCH" in out


def test_lgv_budget_exit_code(tmp_path, capsys):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({
        "initials": [[0, 0], [-1, 1]], "terminals": [[4, 0], [5, 1]],
        "ell": 1, "t": "1"}))
    code, _, err = run(capsys, "lgv", "--config", str(config),
                       "--budget", "1")
    assert code == EXIT_BUDGET
    assert err


def test_verify_filter(capsys):
    code, out, _ = run(capsys, "verify", "--only", "delannoy")
    assert code == EXIT_OK
    assert out.startswith("PASS  delannoy-det")


def test_verify_unknown_filter(capsys):
    code, _, err = run(capsys, "verify", "--only", "nope-nothing")
    assert code == EXIT_USAGE


def test_missing_subcommand(capsys):
    assert main([]) == EXIT_USAGE


def test_unknown_flag(capsys):
    assert main(["seq", "--bogus"]) == EXIT_USAGE

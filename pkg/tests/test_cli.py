from __future__ import annotations

import json

import pytest

from diagideal import checks
from diagideal.caps import parse_caps_text
from diagideal.cli import main
from diagideal.errors import FormatError


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_diagonals_text(capsys):
    code, out = run_cli(
        capsys, "diagonals", "--rows", "1", "--cols", "3", "--window", "1,2"
    )
    assert code == 0
    assert out.splitlines() == ["x[1,1]", "x[1,2]"]


def test_diagonals_single_square_window(capsys):
    code, out = run_cli(
        capsys, "diagonals", "--rows", "2", "--cols", "2", "--window", "1,2"
    )
    assert code == 0
    assert out.splitlines() == ["x[1,1]*x[2,2]"]


def test_diagonals_json(capsys):
    code, out = run_cli(
        capsys,
        "diagonals", "--rows", "3", "--cols", "8", "--window", "2,6",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["shape"] == [3, 8]
    assert len(payload["generators"]) == 10


def test_ideal_product(capsys):
    code, out = run_cli(
        capsys,
        "ideal-product", "--rows", "1", "--cols", "3", "--chain", "1,2:2,3",
    )
    assert code == 0
    assert out.splitlines() == [
        "x[1,1]*x[1,2]",
        "x[1,1]*x[1,3]",
        "x[1,2]^2",
        "x[1,2]*x[1,3]",
    ]


def test_unsorted_chain_rejected_without_force(capsys):
    code, out = run_cli(
        capsys,
        "ideal-product", "--rows", "3", "--cols", "9", "--chain", "3,7:1,5",
    )
    assert code == 2


def test_unsorted_chain_allowed_with_force(capsys):
    code, out = run_cli(
        capsys,
        "ideal-product", "--rows", "3", "--cols", "9", "--chain", "3,7:1,5",
        "--force-brute",
    )
    assert code == 0
    assert len(out.splitlines()) > 0


def test_colon_step_agrees(capsys):
    code, out = run_cli(
        capsys,
        "colon", "--rows", "3", "--cols", "8", "--chain", "2,6",
        "--step", "3", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["equal"] is True
    assert payload["brute"] == "<x[2,3]>"


def test_colon_force_brute_skips_closed_form(capsys):
    code, out = run_cli(
        capsys,
        "colon", "--rows", "3", "--cols", "9", "--chain", "3,7:1,5",
        "--step", "0", "--force-brute", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["closed"] is None and payload["equal"] is None


def test_colon_step_out_of_range(capsys):
    code, _ = run_cli(
        capsys,
        "colon", "--rows", "3", "--cols", "8", "--chain", "2,6", "--step", "99",
    )
    assert code == 2


def test_linquot_verify(capsys):
    code, out = run_cli(
        capsys, "linquot-verify", "--rows", "3", "--cols", "8", "--window", "2,6"
    )
    assert code == 0
    assert out.startswith("PASS")


def test_betti_json(capsys):
    code, out = run_cli(
        capsys,
        "betti", "--rows", "1", "--cols", "3", "--chain", "1,2:2,3",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["reg"] == 2
    assert {(r["i"], r["j"]): r["beta"] for r in payload["rows"]} == {
        (0, 2): 4, (1, 3): 4, (2, 4): 1,
    }


def test_betti_oracles_agree(capsys):
    outputs = []
    for oracle in ("homology", "cone"):
        code, out = run_cli(
            capsys,
            "betti", "--rows", "3", "--cols", "8", "--window", "2,6",
            "--oracle", oracle, "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        outputs.append(payload["rows"])
    assert outputs[0] == outputs[1]


def test_reg_from_gens_text(capsys):
    code, out = run_cli(
        capsys,
        "reg", "--rows", "1", "--cols", "4",
        "--gens", "<x[1,1]*x[1,2], x[1,3]*x[1,4]>",
        "--oracle", "homology",
    )
    assert code == 0
    assert "reg = 3" in out
    assert "linear resolution: no" in out


def test_reg_requires_exactly_one_source(capsys):
    code, _ = run_cli(
        capsys,
        "reg", "--rows", "1", "--cols", "4",
        "--gens", "<x[1,1]>", "--window", "1,4",
    )
    assert code == 2


def test_groebner_classical_anchor(capsys):
    code, out = run_cli(
        capsys,
        "groebner", "--rows", "2", "--cols", "3", "--chain", "1,3",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload["basis"]) == 3
    assert len(payload["initial_ideal"]) == 3


def test_conjecture_scan_text(capsys):
    code, out = run_cli(
        capsys,
        "conjecture-scan", "--max-rows", "1", "--max-cols", "4",
        "--max-factors", "2",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines and all(line.startswith("true") for line in lines)


def test_conjecture_scan_bounds_capped(capsys):
    code, _ = run_cli(
        capsys,
        "conjecture-scan", "--max-rows", "9", "--max-cols", "4",
        "--max-factors", "1",
    )
    assert code == 2


def test_verify_remarks(capsys):
    code, out = run_cli(capsys, "verify", "--target", "remarks")
    assert code == 0
    assert out.count("PASS") == 2


def test_verify_single_window(capsys):
    code, out = run_cli(
        capsys,
        "verify", "--target", "lemma1", "--rows", "3", "--cols", "8",
        "--window", "2,6", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert len(payload["steps"]) == 9


def test_verify_exit_one_on_failure(capsys, monkeypatch):
    def fake_reports(*args, **kwargs):
        yield {"check": "stub", "ok": False}

    monkeypatch.setattr(checks, "verify_reports", fake_reports)
    code, out = run_cli(capsys, "verify", "--target", "remarks")
    assert code == 1
    assert out.startswith("FAIL")


def test_paper_replay_exit_zero(capsys):
    code, out = run_cli(capsys, "paper-replay")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_json_output_is_deterministic(capsys):
    argv = (
        "verify", "--target", "lemma2", "--rows", "2", "--cols", "5",
        "--chain", "1,4:2,5", "--format", "json",
    )
    code_a, out_a = run_cli(capsys, *argv)
    code_b, out_b = run_cli(capsys, *argv)
    assert code_a == code_b == 0
    assert out_a == out_b


def test_output_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "report.jsonl"
    code, out = run_cli(
        capsys,
        "paper-replay", "--format", "json", "--output", str(target),
    )
    assert code == 0
    assert out == ""
    lines = target.read_text().splitlines()
    assert len(lines) == 18
    assert all(json.loads(line)["ok"] for line in lines)


def test_caps_file_sets_format_and_limits(tmp_path, capsys):
    config = tmp_path / "caps.txt"
    config.write_text("format = json\nmax_conjecture_cols = 3\n")
    code, out = run_cli(
        capsys,
        "conjecture-scan", "--max-rows", "1", "--max-cols", "4",
        "--max-factors", "1", "--caps", str(config),
    )
    # cols bound 4 now exceeds the configured cap 3
    assert code == 2
    code, out = run_cli(
        capsys,
        "conjecture-scan", "--max-rows", "1", "--max-cols", "3",
        "--max-factors", "1", "--caps", str(config),
    )
    assert code == 0
    for line in out.splitlines():
        json.loads(line)  # format=json came from the config file


def test_flag_overrides_caps_file(tmp_path, capsys):
    config = tmp_path / "caps.txt"
    config.write_text("format = json\n")
    code, out = run_cli(
        capsys,
        "diagonals", "--rows", "1", "--cols", "3", "--window", "1,2",
        "--caps", str(config), "--format", "text",
    )
    assert code == 0
    assert out.splitlines() == ["x[1,1]", "x[1,2]"]


def test_parse_caps_text_rejects_unknown_keys():
    with pytest.raises(FormatError):
        parse_caps_text("max_spairs = 10\nbogus_key = 3\n")


def test_parse_caps_text_types():
    caps, extras = parse_caps_text("max_spairs = 10\nseed = 5\nchar = 0\n")
    assert caps.max_spairs == 10
    assert extras == {"seed": "5", "char": "0"}


def test_bad_window_flag(capsys):
    code, _ = run_cli(
        capsys, "diagonals", "--rows", "1", "--cols", "3", "--window", "12"
    )
    assert code == 2


def test_broken_pipe_stays_quiet():
    import subprocess
    import sys

    proc = subprocess.run(
        f"{sys.executable} -m diagideal.cli verify --target all "
        "--format json | head -1",
        shell=True, capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "Traceback" not in proc.stderr

"""Command-line interface: dispatch, option resolution, outputs, suites."""

import json
import math
import os

import pytest
from mpmath import mpf

from szegolab.asymptotics import ConvergenceReport
from szegolab.cli import (
    ENV_PRECISION,
    RunConfig,
    main,
    report_json,
    write_text_atomic,
)
from szegolab.errors import ConfigurationError, PrecisionError


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    monkeypatch.delenv(ENV_PRECISION, raising=False)


def test_no_command_is_usage_error(capsys):
    assert main([]) == 2
    assert "usage" in capsys.readouterr().err.lower()


def test_unknown_command_is_usage_error():
    assert main(["frobnicate"]) == 2


def test_unknown_flag_is_usage_error():
    assert main(["zeros", "--bogus", "1"]) == 2


def test_missing_required_option(capsys):
    assert main(["zeros", "--n", "6"]) == 2
    assert "usage error" in capsys.readouterr().err


def test_zeros_file_output_and_determinism(tmp_path, capsys):
    out = tmp_path / "zeros.csv"
    argv = ["zeros", "--n", "6", "--alpha", "-6.5", "--precision", "192",
            "--out", str(out)]
    assert main(argv) == 0
    assert "wrote 6 zeros" in capsys.readouterr().out
    first = out.read_bytes()
    lines = first.decode().splitlines()
    assert lines[0] == "re,im,residual"
    assert len(lines) == 7
    assert main(argv) == 0
    assert out.read_bytes() == first


def test_zeros_stdout_and_degenerate_alpha(capsys):
    # degenerate alpha is legal input here: the factored origin zeros come
    # out exactly
    assert main(["zeros", "--n", "4", "--alpha", "-2", "--precision", "128"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("re,im,residual")
    assert out.count("0.0,0.0,0.0") == 2


def test_curve_rows(tmp_path):
    out = tmp_path / "curve.csv"
    assert main(["curve", "--r", "1", "--nodes", "64", "--precision", "128",
                 "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "theta,re,im"
    assert len(lines) == 65
    assert lines[1].split(",")[0] == "0.0"


def test_curve_rejects_odd_nodes():
    assert main(["curve", "--r", "1", "--nodes", "65"]) == 2


def test_measure_point_mass_at_infinite_level(capsys):
    assert main(["measure", "--r", "inf", "--precision", "128"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "re,im,weight"
    assert len(lines) == 2
    assert lines[1] == "0.0,0.0,1.0"


def test_potential_exterior_value(capsys):
    assert main(["potential", "--r", "1", "--at", "2", "--nodes", "256",
                 "--precision", "192"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "re,im,potential"
    value = float(lines[1].split(",")[2])
    assert abs(value + math.log(2)) <= 1e-10


def test_verify_laguerre_identities(capsys):
    assert main(["verify", "--suite", "laguerre-identities",
                 "--precision", "256"]) == 0
    out = capsys.readouterr().out
    assert "3/3 checks passed" in out
    assert "FAIL" not in out


def test_verify_lemma1_fails_honestly_at_the_corner(capsys):
    # the equal-weight discretization cannot reach the moment tolerance at
    # r = 0 with few nodes; verify must report that, not hide it
    assert main(["verify", "--suite", "lemma1", "--r", "0", "--nodes", "64",
                 "--precision", "192"]) == 1
    out = capsys.readouterr().out
    assert "FAIL moments" in out
    assert "PASS mass" in out


def test_verify_lemma1_passes_away_from_the_corner(capsys):
    assert main(["verify", "--suite", "lemma1", "--r", "1", "--nodes", "256",
                 "--precision", "192"]) == 0
    assert "3/3 checks passed" in capsys.readouterr().out


def test_verify_unknown_suite():
    assert main(["verify", "--suite", "nonsense"]) == 2


def test_leja_stdout(capsys):
    assert main(["leja", "--r", "0", "--count", "8", "--grid", "128",
                 "--precision", "64"]) == 0
    assert "robin estimate" in capsys.readouterr().out


def test_env_precision_fallback(tmp_path, monkeypatch):
    low = tmp_path / "low.csv"
    high = tmp_path / "high.csv"
    monkeypatch.setenv(ENV_PRECISION, "64")
    assert main(["curve", "--r", "1", "--nodes", "16", "--out", str(low)]) == 0
    # an explicit flag beats the environment
    assert main(["curve", "--r", "1", "--nodes", "16", "--precision", "256",
                 "--out", str(high)]) == 0
    theta_low = low.read_text().splitlines()[2].split(",")[0]
    theta_high = high.read_text().splitlines()[2].split(",")[0]
    assert len(theta_high) > len(theta_low) + 40


def test_config_file_and_flag_precedence(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# defaults for the curve runs\nr = 1\nnodes = 32\n")
    out = tmp_path / "a.csv"
    assert main(["curve", "--config", str(cfg), "--precision", "128",
                 "--out", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 33
    assert main(["curve", "--config", str(cfg), "--nodes", "16",
                 "--precision", "128", "--out", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 17


def test_config_file_errors(tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("this is not a key value pair\n")
    assert main(["curve", "--config", str(bad)]) == 2
    assert main(["curve", "--config", str(tmp_path / "missing.cfg")]) == 2


def test_run_config_invariants():
    with pytest.raises(PrecisionError):
        RunConfig(precision_bits=32)
    with pytest.raises(ConfigurationError):
        RunConfig(precision_bits=128, curve_nodes=15)
    with pytest.raises(ConfigurationError):
        RunConfig(precision_bits=128, curve_nodes=34, tolerance=mpf(0))
    config = RunConfig(precision_bits=128)
    assert config.curve_nodes == 512
    assert str(config.out_dir) == "."


def test_experiment_requires_exactly_one_mode(tmp_path):
    assert main(["experiment"]) == 2
    assert main(["experiment", "--fig", "2", "--schedule", "generic",
                 "--out-dir", str(tmp_path)]) == 2
    assert main(["experiment", "--fig", "5", "--out-dir", str(tmp_path)]) == 2


def test_experiment_schedule_outputs(tmp_path, capsys):
    assert main(["experiment", "--schedule", "generic", "--c", "0.25",
                 "--n", "8", "--nodes", "64", "--precision", "192",
                 "--out-dir", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "r_eff =" in out
    assert "level median =" in out
    for suffix in ("zeros.csv", "curve.csv", "report.json"):
        path = tmp_path / f"generic_n8_{suffix}"
        assert path.exists()
    report = json.loads((tmp_path / "generic_n8_report.json").read_text())
    assert report["n"] == 8
    assert len(report["moment_gaps"]) == 5


def test_write_text_atomic(tmp_path):
    target = tmp_path / "data.txt"
    write_text_atomic(target, "first\n")
    write_text_atomic(target, "second\n")
    assert target.read_text() == "second\n"
    assert os.listdir(tmp_path) == ["data.txt"]


def test_report_json_key_order():
    report = ConvergenceReport(
        n=3,
        alpha=mpf("-3.5"),
        r_eff=mpf("0.25"),
        level_deviation=mpf("0.01"),
        ks_theta=mpf("0.02"),
        moment_gaps=(mpf(0), mpf("0.001")),
        supnorm_gap=mpf("-0.03"),
        origin_gap=mpf("0.04"),
    )
    payload = json.loads(report_json(report, 128))
    assert list(payload) == [
        "n",
        "alpha",
        "r_eff",
        "level_deviation",
        "ks_theta",
        "moment_gaps",
        "supnorm_gap",
        "origin_gap",
    ]
    assert payload["n"] == 3

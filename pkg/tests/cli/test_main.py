"""
Unit tests for the command line
"""
import importlib
import json

import pandas
import pytest

from cyclosc.cli.main import (
    EX_CANTCREAT,
    EX_DATAERR,
    EX_NOINPUT,
    EX_SOFTWARE,
    EX_USAGE,
    build_parser,
    run,
)
from cyclosc.network.network_model import NetworkSpec, save_spec
from cyclosc.regions.scan import THREADS_VARIABLE


def test_analyze_exit_codes(capsys):
    """Oscillating networks exit 0, stable ones 1"""
    assert run(["analyze", "--preset", "example7"]) == 0
    out = capsys.readouterr().out
    assert "analytic: OscillationsGuaranteed" in out
    assert out.strip().endswith("outcome: OscillationsGuaranteed")
    assert run(["analyze", "--preset", "example7_nodelay"]) == 1


def test_analyze_report(tmp_path):
    """Reports carry thresholds and per-method verdicts"""
    path = tmp_path / "report.json"
    code = run(
        [
            "analyze",
            "--preset",
            "hes7_mutant",
            "--methods",
            "analytic,ratio",
            "--out",
            str(path),
        ]
    )
    assert code == 1
    report = json.loads(path.read_text())
    assert report["thresholds"]["R_bar"] == "not-applicable"
    assert set(report["verdicts"]) == {"analytic", "ratio"}
    assert report["outcome"] == "LocallyStable"
    assert report["mps_form"]["all_positive"]


def test_analyze_all_methods(tmp_path):
    """Every method agrees on the counterexample"""
    path = tmp_path / "report.json"
    code = run(
        [
            "analyze",
            "--preset",
            "counterexample",
            "--methods",
            "all",
            "--out",
            str(path),
        ]
    )
    assert code == 0
    verdicts = json.loads(path.read_text())["verdicts"]
    assert len(verdicts) == 5
    assert verdicts["nyquist"]["witness"]["winding"] == 2


def test_analyze_spec_file(tmp_path, counterexample):
    """Networks are read from JSON files"""
    path = tmp_path / "net.json"
    save_spec(counterexample, path)
    assert run(["analyze", "--spec", str(path)]) == 0
    path.write_text("{not json")
    assert run(["analyze", "--spec", str(path)]) == EX_NOINPUT
    missing = tmp_path / "missing.json"
    assert run(["analyze", "--spec", str(missing)]) == EX_NOINPUT


def test_invalid_data_exit_codes(tmp_path, counterexample):
    """Domain errors map to the data error status"""
    assert run(["analyze", "--preset", "brusselator"]) == EX_DATAERR
    assert (
        run(["analyze", "--preset", "example7", "--methods", "spiral"])
        == EX_DATAERR
    )
    bad = NetworkSpec(genes=counterexample.genes, nu=0.5)
    path = tmp_path / "net.json"
    save_spec(bad, path)
    assert run(["analyze", "--spec", str(path)]) == EX_DATAERR
    config = tmp_path / "controls.json"
    config.write_text(json.dumps({"speed": 1}))
    args = ["analyze", "--preset", "example7", "--config", str(config)]
    assert run(args) == EX_DATAERR
    config.unlink()
    assert run(args) == EX_NOINPUT


def test_unwritable_output_exit_code(tmp_path):
    """Outputs that cannot be created never exit with a verdict code"""
    target = tmp_path / "missing" / "report.json"
    code = run(["analyze", "--preset", "example7", "--out", str(target)])
    assert code == EX_CANTCREAT
    assert not target.parent.exists()


def test_internal_error_exit_code(monkeypatch, caplog):
    """Unexpected exceptions are logged and reported as software errors"""

    def _broken(*args):
        raise KeyError("thresholds")

    monkeypatch.setattr(
        importlib.import_module("cyclosc.cli.main"), "build_report", _broken
    )
    assert run(["analyze", "--preset", "example7"]) == EX_SOFTWARE
    assert "internal error" in caplog.text


def test_usage_errors():
    """Argument errors exit with the usage status"""
    with pytest.raises(SystemExit) as err:
        run(["analyze", "--preset", "example7", "--speed", "1"])
    assert err.value.code == EX_USAGE
    with pytest.raises(SystemExit) as err:
        run(["analyze"])
    assert err.value.code == EX_USAGE
    with pytest.raises(SystemExit) as err:
        build_parser().parse_args(["--version"])
    assert err.value.code == 0


def test_simulate(tmp_path, capsys):
    """Trajectory table and classification"""
    path = tmp_path / "traj.csv"
    code = run(
        [
            "simulate",
            "--preset",
            "counterexample",
            "--t-end",
            "200",
            "--dt",
            "0.05",
            "--stride",
            "10",
            "--out",
            str(path),
        ]
    )
    assert code == 0
    assert capsys.readouterr().out.strip() == "Oscillating"
    frame = pandas.read_csv(path)
    assert list(frame.columns) == ["t", "r1", "p1", "r2", "p2", "r3", "p3"]
    assert len(frame) == 401
    assert frame["t"].iloc[1] == pytest.approx(0.5)


def test_simulate_constant_history(tmp_path):
    """Constant histories need one value per state"""
    path = tmp_path / "traj.csv"
    args = ["simulate", "--preset", "counterexample", "--t-end", "5"]
    args += ["--out", str(path), "--history"]
    assert run(args + ["const:1,1,1,1,1,1"]) == 0
    assert run(args + ["const:1,1"]) == EX_DATAERR
    assert run(args + [str(tmp_path / "none.csv")]) == EX_NOINPUT


def test_sweep(tmp_path, monkeypatch, capsys):
    """Grid table, axis sidecar and boundary"""
    monkeypatch.setenv(THREADS_VARIABLE, "1")
    grid_path = tmp_path / "grid.csv"
    boundary_path = tmp_path / "boundary.csv"
    code = run(
        [
            "sweep",
            "--preset",
            "example7",
            "--x",
            "tau:0:2:5",
            "--y",
            "nu:2.6:3.6:2",
            "--out",
            str(grid_path),
            "--boundary",
            str(boundary_path),
        ]
    )
    assert code == 0
    assert "cells" in capsys.readouterr().out
    grid = pandas.read_csv(grid_path)
    assert len(grid) == 10
    sidecar = json.loads((tmp_path / "grid.json").read_text())
    assert sidecar["x_axis"]["parameter"] == "tau"
    assert NetworkSpec.from_dict(sidecar["template"]).N == 7
    boundary = pandas.read_csv(boundary_path)
    assert list(boundary.columns) == ["segment", "x", "y"]
    assert len(boundary) >= 1


def test_nyquist(tmp_path, capsys):
    """Curve samples and winding number"""
    path = tmp_path / "curve.csv"
    code = run(
        ["nyquist", "--preset", "counterexample", "--n", "256"]
        + ["--out", str(path)]
    )
    assert code == 0
    assert capsys.readouterr().out.strip() == "winding: 2"
    frame = pandas.read_csv(path)
    assert list(frame.columns) == ["omega", "re", "im"]
    assert frame["omega"].iloc[0] == -frame["omega"].iloc[-1]


def test_boundary(tmp_path):
    """Boundary curve with the eigenvalue ring beside it"""
    path = tmp_path / "curve.csv"
    args = ["boundary", "--N", "3", "--Q", "0.8", "--tau-tilde", "1"]
    args += ["--n", "11", "--L", "1.2", "--out", str(path)]
    assert run(args) == 0
    assert len(pandas.read_csv(path)) == 21
    ring = pandas.read_csv(tmp_path / "curve_ring.csv")
    assert list(ring["k"]) == [1, 2, 3]
    assert ring["re"].iloc[1] == pytest.approx(-1.2)
    bad = ["boundary", "--N", "0", "--Q", "0.8", "--out", str(path)]
    assert run(bad) == EX_DATAERR


def test_presets(capsys):
    """Catalogue listing and JSON export"""
    assert run(["presets", "list"]) == 0
    assert "hes7_wild" in capsys.readouterr().out
    assert run(["presets", "show", "counterexample"]) == 0
    spec = NetworkSpec.from_json(capsys.readouterr().out)
    assert spec.N == 3
    assert run(["presets", "show"]) == EX_DATAERR

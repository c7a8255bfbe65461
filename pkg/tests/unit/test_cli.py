"""
Unit tests for the command line:
- config resolution (file < flags) and validation
- spectrum / photon / dynamics output shape and determinism
- exit codes
- the sweep worker pool
"""

import io
import json
import threading
import time

import pandas as pd
import pytest

from qrabi.cli import (
    EXIT_CHECK_FAILED,
    EXIT_CONFIG,
    EXIT_CONVERGENCE,
    EXIT_OK,
    DynamicsConfig,
    Method,
    SweepConfig,
    load_config_file,
    main,
    resolve_config,
)
from qrabi.cli.sweep import run_sweep
from qrabi.exact import ed_mean_photon
from qrabi.exceptions import ConfigError
from qrabi.model import FockTruncation, ModelParams
from qrabi.validation import CheckResult, ValidationReport
from qrabi.vgrwa import adiabatic_ground_energy, solve_lambda_adiabatic


def run(capsys, *argv):
    code = main(["--log-level", "ERROR", *argv])
    return code, capsys.readouterr().out


def frame(text: str) -> pd.DataFrame:
    return pd.read_csv(io.StringIO(text))


def test_method_list_is_parsed_and_ordered():
    """Test duplicate and unordered methods collapse to the canonical order."""
    config = SweepConfig(Omega=2.0, g=0.1, methods="grwa, ed,grwa")
    assert config.methods == [Method.ED, Method.GRWA]


def test_single_point_is_a_g_sweep():
    """Test a fixed (g, Omega) point is reported as a one-value g sweep."""
    config = SweepConfig(Omega=2.0, g=0.1)
    assert config.sweep_param == "g"
    assert config.sweep_values == [0.1]


def test_omega_sweep():
    """Test an Omega range with fixed g."""
    config = SweepConfig(g=0.1, Omega_min=0.5, Omega_max=10.0, Omega_steps=96)
    assert config.sweep_param == "Omega"
    assert len(config.sweep_values) == 96
    assert config.params_at(0.5).Omega == 0.5
    assert config.params_at(0.5).g == 0.1


@pytest.mark.parametrize(
    "values",
    [
        {"Omega": 2.0, "g_min": 0.0, "g_max": 1.0, "Omega_min": 0.5, "Omega_max": 1.0},
        {"g_min": 0.0, "g_max": 1.0},
        {"Omega": 2.0, "g_min": 1.0, "g_max": 0.0},
        {"Omega": 2.0},
        {"Omega": 2.0, "g": 0.1, "levels": 0},
        {"Omega": 2.0, "g": 0.1, "methods": "ed,exact"},
        {"Omega": 2.0, "g": 0.1, "unknown": 1},
    ],
)
def test_invalid_sweeps(values):
    """Test inconsistent sweep configurations raise ConfigError."""
    with pytest.raises(ConfigError):
        resolve_config(SweepConfig, {}, values)


def test_dynamics_rejects_adiabatic():
    """Test the adiabatic method is not offered for dynamics."""
    with pytest.raises(ConfigError):
        resolve_config(DynamicsConfig, {}, {"Omega": 2.0, "g": 0.2, "methods": "vgrwa,adiabatic"})


def test_file_values_lose_to_flags(tmp_path):
    """Test flags override the config file, which overrides the defaults."""
    path = tmp_path / "sweep.conf"
    path.write_text("Omega = 1.5\ng = 0.3\nlambda-strategy = exact-root\n")
    file_values = load_config_file(str(path))
    assert file_values["lambda_strategy"] == "exact-root"

    config = resolve_config(SweepConfig, file_values, {"g": 0.1, "levels": None})
    assert config.Omega == 1.5
    assert config.g == 0.1
    assert config.levels == 7


def test_missing_config_file(tmp_path):
    """Test a missing config file raises ConfigError."""
    with pytest.raises(ConfigError):
        load_config_file(str(tmp_path / "absent.conf"))


def test_decoupled_spectrum(capsys):
    """Test the ED spectrum at g = 0, Omega = 1 in CSV form."""
    code, out = run(capsys, "spectrum", "--Omega", "1", "--g", "0", "--methods", "ed", "--levels", "3",
                    "--n-max", "20", "--quiet")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "sweep_param,sweep_value,method,level,quantity,value"
    table = frame(out)
    assert table["value"].tolist() == pytest.approx([-1.0, 0.0, 0.0], abs=1e-12)
    assert set(table["method"]) == {"ed"}


def test_output_is_deterministic(capsys):
    """Test two identical runs produce byte-identical, sorted output."""
    argv = ("spectrum", "--Omega", "2", "--g-min", "0", "--g-max", "0.4", "--g-steps", "5",
            "--methods", "vgrwa,grwa,adiabatic", "--quiet")
    _, first = run(capsys, *argv)
    _, second = run(capsys, *argv)
    assert first == second
    table = frame(first)
    assert len(table) == 5 * 3 * 7
    assert list(table["sweep_value"]) == sorted(table["sweep_value"])


def test_json_output(capsys):
    """Test the JSON document carries the resolved config and sorted-key rows."""
    code, out = run(capsys, "spectrum", "--Omega", "2", "--g", "0.3", "--methods", "vgrwa", "--format", "json",
                    "--quiet")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert list(payload) == ["meta", "rows"]
    assert payload["meta"]["config"]["lambda_strategy"] == "closed-form"
    assert payload["meta"]["config"]["levels"] == 7
    assert len(payload["rows"]) == 7
    assert list(payload["rows"][0]) == sorted(payload["rows"][0])


def test_diagnostics_rows(capsys):
    """Test --diagnostics adds lambda and the counter-rotating profile."""
    _, out = run(capsys, "spectrum", "--Omega", "2", "--g", "0.3", "--methods", "vgrwa", "--diagnostics",
                 "--n-blocks", "4", "--quiet")
    table = frame(out)
    assert table[table["quantity"] == "lambda"]["value"].tolist() == pytest.approx([0.1])
    assert (table["quantity"] == "counter_rotating").sum() == 5


def test_adiabatic_follows_lambda_strategy(capsys):
    """Test --lambda-strategy grwa puts the adiabatic baseline at lambda = g/omega."""
    argv = ("spectrum", "--Omega", "2", "--g", "0.5", "--methods", "adiabatic", "--levels", "1", "--quiet")
    params = ModelParams(Omega=2.0, g=0.5)

    _, out = run(capsys, *argv, "--lambda-strategy", "grwa")
    assert frame(out)["value"].tolist() == pytest.approx([adiabatic_ground_energy(params, 0.5)], abs=1e-10)

    _, out = run(capsys, *argv)
    optimal = adiabatic_ground_energy(params, solve_lambda_adiabatic(params).lam)
    assert frame(out)["value"].tolist() == pytest.approx([optimal], abs=1e-10)
    assert optimal < adiabatic_ground_energy(params, 0.5) - 1e-6


def test_photon_reference_row(capsys):
    """Test the g^2/(2 omega^2) reference row next to a decoupled photon number."""
    code, out = run(capsys, "photon", "--g", "0", "--Omega", "2", "--methods", "vgrwa", "--levels", "1",
                    "--quiet")
    assert code == EXIT_OK
    table = frame(out)
    assert table[table["method"] == "vgrwa"]["value"].tolist() == pytest.approx([0.0])
    assert table[table["method"] == "reference"]["value"].tolist() == pytest.approx([0.0])
    assert "photon_ed" not in set(table["quantity"])


def test_photon_rows_matched_to_exact_levels(capsys):
    """Test each approximate level carries the ED photon number of its energy-nearest ED level."""
    code, out = run(capsys, "photon", "--g", "0", "--Omega", "1.5", "--methods", "ed,vgrwa", "--levels", "4",
                    "--n-max", "20", "--quiet")
    assert code == EXIT_OK
    table = frame(out)
    matched = table[(table["method"] == "vgrwa") & (table["quantity"] == "photon_ed")]
    approx = table[(table["method"] == "vgrwa") & (table["quantity"] == "photon")]
    assert matched["level"].tolist() == [0, 1, 2, 3]
    # at g = 0 both sides are integer photon numbers of the same states
    assert matched["value"].tolist() == pytest.approx(approx["value"].tolist(), abs=1e-10)
    exact = [ed_mean_photon(ModelParams(Omega=1.5, g=0.0), FockTruncation(20), level) for level in range(4)]
    assert sorted(matched["value"]) == pytest.approx(sorted(exact), abs=1e-10)


def test_photon_output_file(capsys, tmp_path):
    """Test --output writes the table to a file and nothing to stdout."""
    path = tmp_path / "photon.csv"
    code, out = run(capsys, "photon", "--g", "0.1", "--Omega", "2", "--methods", "grwa", "--levels", "1",
                    "--output", str(path), "--quiet")
    assert code == EXIT_OK
    assert out == ""
    table = frame(path.read_text())
    assert table[table["method"] == "grwa"]["value"].tolist() == pytest.approx([5.01256e-3], rel=1e-5)


def test_decoupled_dynamics(capsys):
    """Test the dynamics columns and the t = 0 row at g = 0."""
    code, out = run(capsys, "dynamics", "--g", "0", "--Omega", "2", "--alpha", "2", "--methods", "vgrwa",
                    "--t-periods", "3", "--samples", "61", "--quiet")
    assert code == EXIT_OK
    table = frame(out)
    assert list(table.columns) == ["t", "t_over_2pi_Omega", "method", "jz", "p_minus1"]
    first = table.iloc[0]
    assert (first["t"], first["t_over_2pi_Omega"], first["method"]) == (0, 0, "vgrwa")
    assert (first["jz"], first["p_minus1"]) == pytest.approx((-1.0, 1.0), abs=1e-11)


def test_dynamics_deviation_columns(capsys):
    """Test deviation columns appear with ed and vanish on the ed rows."""
    _, out = run(capsys, "dynamics", "--g", "0.2", "--Omega", "2", "--methods", "ed,vgrwa", "--t-periods", "1",
                 "--samples", "11", "--n-max", "60", "--quiet")
    table = frame(out)
    assert list(table.columns)[-2:] == ["jz_dev", "p_minus1_dev"]
    assert table["method"].tolist() == ["ed"] * 11 + ["vgrwa"] * 11
    assert table[table["method"] == "ed"]["jz_dev"].abs().max() == 0.0


def test_config_error_exit_code(capsys):
    """Test sweeping g and Omega at once exits with 2."""
    code, _ = run(capsys, "spectrum", "--Omega", "2", "--g-min", "0", "--g-max", "1", "--Omega-min", "1",
                  "--Omega-max", "2")
    assert code == EXIT_CONFIG


def test_adiabatic_dynamics_is_rejected(capsys):
    """Test adiabatic dynamics exits with 2."""
    code, _ = run(capsys, "dynamics", "--g", "0.2", "--Omega", "2", "--methods", "adiabatic")
    assert code == EXIT_CONFIG


def test_unconverged_exact_levels(capsys):
    """Test an unconverged ED truncation exits with 3 and writes no rows."""
    code, out = run(capsys, "spectrum", "--Omega", "1", "--g", "1", "--methods", "ed", "--n-max", "3",
                    "--quiet")
    assert code == EXIT_CONVERGENCE
    assert out == ""


def test_truncated_dynamics(capsys):
    """Test a cutoff below the coherent tail exits with 3."""
    code, _ = run(capsys, "dynamics", "--g", "0.2", "--Omega", "2", "--alpha", "5", "--methods", "vgrwa",
                  "--cutoff", "5", "--samples", "3", "--quiet")
    assert code == EXIT_CONVERGENCE


def test_fock_cap_overflow(capsys, monkeypatch):
    """Test a request beyond the Fock cap exits with 2."""
    monkeypatch.setattr("qrabi.config.settings.solver.fock_cap", 8)
    code, out = run(capsys, "spectrum", "--Omega", "2", "--g", "0.3", "--methods", "vgrwa", "--n-blocks", "20",
                    "--quiet")
    assert code == EXIT_CONFIG
    assert out == ""


def test_validate_reports_failures(capsys, monkeypatch):
    """Test a failed check exits with 1 and is named in the report."""
    report = ValidationReport(level="fast", results=[CheckResult.failure("LAMBDA-ORDER", "broken")])
    monkeypatch.setattr("qrabi.cli.commands.run_validation", lambda level, mutate: report)
    code, out = run(capsys, "validate", "fast")
    assert code == EXIT_CHECK_FAILED
    assert "FAILED: LAMBDA-ORDER" in out


def test_validate_passes(capsys, monkeypatch):
    """Test a clean report exits with 0 and prints the header."""
    report = ValidationReport(level="fast", results=[CheckResult.success("AC7", "ok")])
    monkeypatch.setattr("qrabi.cli.commands.run_validation", lambda level, mutate: report)
    code, out = run(capsys, "validate")
    assert code == EXIT_OK
    assert "in-repo exact-diagonalization oracle" in out


def test_sweep_keeps_input_order():
    """Test results come back in input order regardless of completion order."""
    results = run_sweep(lambda index, item: (index, item * item), [3, 1, 2, 5], desc="test", quiet=True, threads=4)
    assert results == [(0, 9), (1, 1), (2, 4), (3, 25)]


def test_sweep_propagates_errors():
    """Test a failing point re-raises its exception."""

    def task(index, item):
        if item == 2:
            raise ValueError("bad point")
        return item

    with pytest.raises(ValueError):
        run_sweep(task, [1, 2, 3], desc="test", quiet=True, threads=2)


def test_sweep_cancels_queued_points_on_failure():
    """Test points still queued behind a failure are never started."""
    started = []
    lock = threading.Lock()

    def task(index, item):
        with lock:
            started.append(index)
        if index == 0:
            raise ValueError("bad point")
        time.sleep(0.01)
        return item

    with pytest.raises(ValueError):
        run_sweep(task, list(range(50)), desc="test", quiet=True, threads=1)
    assert len(started) < 50

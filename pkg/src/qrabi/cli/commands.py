"""
Command implementations behind the ``qrabi`` entry point.

Every command returns plain row dictionaries plus a metadata mapping; the
entry point serializes them. Rows are sorted before they leave this module.
"""

from typing import Any, Dict, List, Optional, Tuple

from qrabi.config import settings
from qrabi.dynamics import TimeGrid, TimeSeries, analytic_dynamics
from qrabi.exact import ed_dynamics, ed_mean_photon, ed_spectrum
from qrabi.logging import logger
from qrabi.model import FockTruncation, ModelParams
from qrabi.observables import match_levels, photon_levels
from qrabi.validation import ValidationReport, run_validation
from qrabi.vgrwa import (
    LambdaStrategy,
    SpectrumTable,
    assemble_adiabatic_spectrum,
    assemble_spectrum,
    counter_rotating_profile,
    solve_lambda,
)

from .config import DynamicsConfig, Method, SweepConfig
from .sweep import run_sweep

Rows = List[Dict[str, Any]]
METHOD_ORDER = {method.value: rank for rank, method in enumerate(Method)}


def _row(config: SweepConfig, value: float, method: str, level: int, quantity: str, number: float) -> Dict[str, Any]:
    return {
        "sweep_param": config.sweep_param,
        "sweep_value": float(value),
        "method": str(method),
        "level": int(level),
        "quantity": quantity,
        "value": float(number),
    }


def _table(params: ModelParams, method: Method, config: SweepConfig) -> SpectrumTable:
    if method is Method.ADIABATIC:
        # --lambda-strategy grwa keeps the adiabatic baseline at lambda = g/omega
        strategy = (
            LambdaStrategy.GRWA_FIXED
            if config.lambda_strategy is LambdaStrategy.GRWA_FIXED
            else LambdaStrategy.ADIABATIC_OPTIMAL
        )
        return assemble_adiabatic_spectrum(params, solve_lambda(params, strategy), config.blocks)
    strategy = LambdaStrategy.GRWA_FIXED if method is Method.GRWA else config.lambda_strategy
    return assemble_spectrum(params, solve_lambda(params, strategy), config.blocks)


def _sorted_static(rows: Rows) -> Rows:
    def key(row):
        return (row["sweep_value"], METHOD_ORDER.get(row["method"], -1), row["quantity"], row["level"])

    return sorted(rows, key=key)


def _meta(command: str, config) -> Dict[str, Any]:
    return {
        "command": command,
        "config": config.model_dump(mode="json"),
        "solver": settings.solver.model_dump(mode="json"),
    }


def _is_endpoint(index: int, total: int) -> bool:
    return index == 0 or index == total - 1


def cmd_spectrum(config: SweepConfig, quiet: bool = False) -> Tuple[Rows, Dict[str, Any]]:
    """Lowest `levels` energies per grid point and method."""
    trunc = FockTruncation(config.n_max)
    values = config.sweep_values

    def point(index: int, value: float) -> Rows:
        params = config.params_at(value)
        rows = []
        for method in config.methods:
            if method is Method.ED:
                energies = ed_spectrum(params, trunc, config.levels, verify=_is_endpoint(index, len(values)))
            else:
                table = _table(params, method, config)
                energies = [level.energy for level in table.lowest(min(config.levels, len(table)))]
                if config.diagnostics and method is not Method.ADIABATIC:
                    rows.append(_row(config, value, method, 0, "lambda", table.disp.lam))
                    profile = counter_rotating_profile(params, table.disp, config.blocks)
                    rows += [_row(config, value, method, n, "counter_rotating", c) for n, c in enumerate(profile)]
            rows += [_row(config, value, method, level, "energy", energy) for level, energy in enumerate(energies)]
        return rows

    results = run_sweep(point, values, desc="spectrum", quiet=quiet)
    return _sorted_static([row for rows in results for row in rows]), _meta("spectrum", config)


def _matched_exact_photons(
    params: ModelParams, trunc: FockTruncation, table: SpectrumTable, count: int, pool: int
) -> List[Tuple[int, float]]:
    """ED photon number of the energy-nearest ED level for each of the lowest `count` approximate levels."""
    exact = ed_spectrum(params, trunc, min(pool, trunc.dimension), verify=False)
    pairs = match_levels([level.energy for level in table.lowest(count)], exact)
    return [(level, ed_mean_photon(params, trunc, column)) for level, column in pairs]


def cmd_photon(config: SweepConfig, quiet: bool = False) -> Tuple[Rows, Dict[str, Any]]:
    """
    Mean photon numbers of the lowest `levels` levels, with the g^2/(2 omega^2) reference.

    With ed among the methods, every approximate level also gets a `photon_ed` row: the ED
    photon number of the energy-nearest level among the lowest 3 * blocks + 3 ED levels.
    """
    trunc = FockTruncation(config.n_max)
    values = config.sweep_values
    pool = 3 * config.blocks + 3

    def point(index: int, value: float) -> Rows:
        params = config.params_at(value)
        rows = [_row(config, value, "reference", 0, "photon", params.g**2 / (2.0 * params.omega**2))]
        for method in config.methods:
            if method is Method.ED:
                if _is_endpoint(index, len(values)):
                    ed_spectrum(params, trunc, config.levels, verify=True)
                photons = [ed_mean_photon(params, trunc, level) for level in range(config.levels)]
            else:
                table = _table(params, method, config)
                count = min(config.levels, len(table))
                photons = [p.value for p in photon_levels(params, table, count)]
                if Method.ED in config.methods:
                    matched = _matched_exact_photons(params, trunc, table, count, pool)
                    rows += [_row(config, value, method, level, "photon_ed", photon) for level, photon in matched]
            rows += [_row(config, value, method, level, "photon", photon) for level, photon in enumerate(photons)]
        return rows

    results = run_sweep(point, values, desc="photon", quiet=quiet)
    return _sorted_static([row for rows in results for row in rows]), _meta("photon", config)


def _series(config: DynamicsConfig, method: Method, grid: TimeGrid) -> TimeSeries:
    params = config.params
    if method is Method.ED:
        trunc = None if config.n_max == settings.solver.n_max else FockTruncation(config.n_max)
        return ed_dynamics(params, config.alpha, grid, trunc)
    strategy = LambdaStrategy.GRWA_FIXED if method is Method.GRWA else config.lambda_strategy
    return analytic_dynamics(params, solve_lambda(params, strategy), config.alpha, grid, config.cutoff)


def cmd_dynamics(config: DynamicsConfig, quiet: bool = False) -> Tuple[Rows, Dict[str, Any], bool]:
    """
    <J_z>(t) and P_-1(t) traces per method.

    Returns:
        Tuple[Rows, Dict[str, Any], bool]: Rows, metadata, and whether deviation columns are present.
    """
    grid = TimeGrid.periods(config.Omega, config.t_periods, config.samples)
    traces = run_sweep(lambda _, method: _series(config, method, grid), config.methods, desc="dynamics", quiet=quiet)
    by_method = dict(zip(config.methods, traces))
    reference: Optional[TimeSeries] = by_method.get(Method.ED)

    rows = []
    for method, series in by_method.items():
        for i, (t, periods) in enumerate(zip(series.times, series.t_over_2pi_Omega)):
            row = {
                "t": float(t),
                "t_over_2pi_Omega": float(periods),
                "method": str(method),
                "jz": float(series.jz[i]),
                "p_minus1": float(series.p_minus1[i]),
            }
            if reference is not None:
                row["jz_dev"] = float(series.jz[i] - reference.jz[i])
                row["p_minus1_dev"] = float(series.p_minus1[i] - reference.p_minus1[i])
            rows.append(row)
        if series.norm is not None:
            logger.info(f"{method}: norm drift {series.norm_drift:.3e} over {len(grid)} samples")

    rows.sort(key=lambda row: (METHOD_ORDER[row["method"]], row["t"]))
    meta = _meta("dynamics", config)
    meta["cutoffs"] = {str(method): series.initial_state.as_dict() for method, series in by_method.items()}
    return rows, meta, reference is not None


def cmd_validate(level: str = "fast", mutate: Optional[str] = None) -> ValidationReport:
    """Run the acceptance suite; a mutation corrupts one constant for the duration of the run."""
    return run_validation(level=level, mutate=mutate)

"""
Acceptance and component checks run by ``qrabi validate``.

Each check is a zero-argument function returning a CheckResult. Checks are
registered in report order; `full_only` checks are skipped at the fast level.
"""

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

import numpy as np
from scipy.linalg import expm

from qrabi.dynamics import TimeGrid, analytic_dynamics
from qrabi.exact import default_truncation, ed_dynamics, ed_mean_photon, ed_spectrum
from qrabi.model import (
    FockTruncation,
    ModelParams,
    build_grwa_hamiltonian,
    build_transformed_hamiltonian,
    displacement_generator,
    project_excitation_conserving,
)
from qrabi.observables import photon_ground_grwa, photon_ground_variational
from qrabi.special import f_coeff, factorial_ratio
from qrabi.vgrwa import (
    LambdaStrategy,
    assemble_spectrum,
    energy_function,
    grwa_block0,
    grwa_blocks,
    solve_lambda,
    stationarity_residual,
)

from .results import CheckResult

G_GRID = tuple(round(0.1 * k, 10) for k in range(1, 11))
OMEGA_GRID = (0.5, 1.0, 2.0, 5.0)

ORDER_SLACK = 1e-12
VARIATIONAL_SLACK = 1e-9
EIGEN_TOL = 1e-10
ORACLE_TOL = 1e-12
# Fock truncation and trusted interior for the transformed-Hamiltonian projection
PROJECTION_N_MAX = 60
PROJECTION_INTERIOR = 20
PROJECTION_TOL = 1e-10


@dataclass(frozen=True)
class Check:
    check_id: str
    description: str
    func: Callable[[], CheckResult]
    full_only: bool = False


CHECKS: List[Check] = []


def register(check_id: str, description: str, full_only: bool = False):
    def decorator(func: Callable[[], CheckResult]) -> Callable[[], CheckResult]:
        CHECKS.append(Check(check_id, description, func, full_only))
        return func

    return decorator


def _grid() -> List[ModelParams]:
    return [ModelParams(Omega=Omega, g=g) for Omega in OMEGA_GRID for g in G_GRID]


def _worst(violations: List[Tuple[str, float]]) -> str:
    label, amount = max(violations, key=lambda item: item[1])
    return f"{len(violations)} violations, worst {label} by {amount:.3e}"


@register("AC1", "E_ED <= E_G(exact root) <= E_G(closed form) <= E_G(g/omega)")
def check_variational_bound() -> CheckResult:
    violations = []
    trunc = default_truncation()
    for params in _grid():
        e_ed = ed_spectrum(params, trunc, k=1, verify=False)[0]
        e_exact = energy_function(params, solve_lambda(params, LambdaStrategy.EXACT_ROOT).lam)
        e_closed = energy_function(params, solve_lambda(params, LambdaStrategy.CLOSED_FORM).lam)
        e_grwa = energy_function(params, params.g / params.omega)
        tag = f"(g={params.g}, Omega={params.Omega})"
        for label, lower, upper, slack in (
            ("E_ED <= E_exact", e_ed, e_exact, VARIATIONAL_SLACK),
            ("E_exact <= E_closed", e_exact, e_closed, ORDER_SLACK),
            ("E_closed <= E_grwa", e_closed, e_grwa, ORDER_SLACK),
        ):
            if lower > upper + slack:
                violations.append((f"{label} {tag}", lower - upper))
    if violations:
        return CheckResult.failure("AC1", _worst(violations))
    return CheckResult.success("AC1", f"energy ordering holds on {len(_grid())} grid points")


@register("AC2", "vgrwa spectrum beats GRWA against ED at Omega = 2")
def check_spectrum_improvement() -> CheckResult:
    levels, blocks = 7, 10
    metadata = {}
    losers = []
    for g in (0.4, 0.6, 0.8, 1.0):
        params = ModelParams(Omega=2.0, g=g)
        exact = np.array(ed_spectrum(params, k=levels, verify=False))
        errors = {}
        for strategy in (LambdaStrategy.CLOSED_FORM, LambdaStrategy.GRWA_FIXED):
            table = assemble_spectrum(params, solve_lambda(params, strategy), blocks)
            approx = np.array([level.energy for level in table.lowest(levels)])
            errors[strategy] = float(np.mean(np.abs(approx - exact)))
        vgrwa, grwa = errors[LambdaStrategy.CLOSED_FORM], errors[LambdaStrategy.GRWA_FIXED]
        metadata[f"g={g} mae vgrwa/grwa"] = [vgrwa, grwa]
        if not vgrwa < grwa:
            losers.append(g)
    message = "vgrwa error below GRWA for every g" if not losers else f"vgrwa not better at g={losers}"
    return CheckResult.verdict("AC2", not losers, message, metadata)


@register("AC3", "photon_grwa > g^2/2 > photon_vgrwa, vgrwa closer to ED for Omega >= 1")
def check_photon_ordering() -> CheckResult:
    g = 0.1
    reference = 0.5 * g * g
    trunc = FockTruncation(200)
    failures = []
    for Omega in np.linspace(0.5, 10.0, 20):
        params = ModelParams(Omega=float(Omega), g=g)
        variational = photon_ground_variational(solve_lambda(params, LambdaStrategy.CLOSED_FORM))
        grwa = photon_ground_grwa(params)
        if not (grwa - reference > ORDER_SLACK and reference - variational > ORDER_SLACK):
            failures.append(f"ordering at Omega={Omega:.4g}")
        if Omega >= 1.0:
            exact = ed_mean_photon(params, trunc)
            if not abs(variational - exact) < abs(grwa - exact):
                failures.append(f"ED distance at Omega={Omega:.4g}")
    if failures:
        return CheckResult.failure("AC3", "; ".join(failures))
    return CheckResult.success("AC3", "ordering and ED proximity hold on 20 Omega values")


@register("AC4", "photon numbers at Omega = 100")
def check_large_splitting() -> CheckResult:
    params = ModelParams(Omega=100.0, g=0.1)
    variational = photon_ground_variational(solve_lambda(params, LambdaStrategy.CLOSED_FORM))
    grwa = photon_ground_grwa(params)
    exact = ed_mean_photon(params)
    metadata = {"vgrwa": variational, "grwa": grwa, "ed": exact}
    ok = variational < 1e-5 and abs(grwa - 0.005) < 1e-4 and exact < 1e-4
    return CheckResult.verdict("AC4", ok, "asymptotic photon limits", metadata)


def _rms(values: np.ndarray) -> float:
    return float(np.sqrt(np.mean(values * values)))


@register("AC5", "vgrwa dynamics closer to ED than GRWA over 500 periods", full_only=True)
def check_dynamics_dominance() -> CheckResult:
    params = ModelParams(Omega=2.0, g=0.2)
    alpha = 2.0
    grid = TimeGrid.periods(params.Omega, 500.0, 4096)
    exact = ed_dynamics(params, alpha, grid)
    traces = {
        strategy: analytic_dynamics(params, solve_lambda(params, strategy), alpha, grid)
        for strategy in (LambdaStrategy.CLOSED_FORM, LambdaStrategy.GRWA_FIXED)
    }
    vgrwa, grwa = traces[LambdaStrategy.CLOSED_FORM], traces[LambdaStrategy.GRWA_FIXED]
    metadata = {
        "rms jz vgrwa/grwa": [_rms(vgrwa.jz - exact.jz), _rms(grwa.jz - exact.jz)],
        "rms p_minus1 vgrwa/grwa": [_rms(vgrwa.p_minus1 - exact.p_minus1), _rms(grwa.p_minus1 - exact.p_minus1)],
        "norm drift vgrwa/grwa": [vgrwa.norm_drift, grwa.norm_drift],
    }
    ok = (
        metadata["rms jz vgrwa/grwa"][0] < metadata["rms jz vgrwa/grwa"][1]
        and metadata["rms p_minus1 vgrwa/grwa"][0] < metadata["rms p_minus1 vgrwa/grwa"][1]
        and max(metadata["norm drift vgrwa/grwa"]) < 1e-12
    )
    return CheckResult.verdict("AC5", ok, "RMS dominance and norm conservation", metadata)


@register("AC6", "cubic-formula eigenpairs match numeric 3x3 diagonalization")
def check_block_eigenpairs() -> CheckResult:
    worst_value, worst_residual, fallbacks, total = 0.0, 0.0, 0, 0
    for params in _grid():
        for block in grwa_blocks(params, solve_lambda(params), 20):
            numeric = np.linalg.eigvalsh(block.matrix)
            worst_value = max(worst_value, float(np.max(np.abs(block.values - numeric))))
            worst_residual = max(worst_residual, block.residual())
            fallbacks += block.solver != "cubic"
            total += 1
    metadata = {"max eigenvalue error": worst_value, "max residual": worst_residual, "numeric fallbacks": fallbacks}
    ok = worst_value < EIGEN_TOL and worst_residual < EIGEN_TOL
    return CheckResult.verdict("AC6", ok, f"{total} blocks compared", metadata)


@register("AC7", "F_m(n) against truncated-Fock displacement matrix elements")
def check_fcoeff_oracle() -> CheckResult:
    size = 80
    worst = 0.0
    for lam in (0.1, 0.5, 1.0):
        displacement = expm(displacement_generator(lam, size))
        for m in range(5):
            for n in range(21):
                element = displacement[n + m, n] * math.sqrt(factorial_ratio(n, m))
                worst = max(worst, abs(element - f_coeff(m, n, lam)))
    return CheckResult.verdict("AC7", worst < EIGEN_TOL, f"max deviation {worst:.3e}", {"max deviation": worst})


@register("AC8", "decoupled dynamics equal -cos(Omega t) and cos^4(Omega t / 2)")
def check_decoupled_dynamics() -> CheckResult:
    params = ModelParams(Omega=2.0, g=0.0)
    grid = TimeGrid.periods(params.Omega, 100.0, 4096)
    series = analytic_dynamics(params, solve_lambda(params), 2.0, grid)
    phase = params.Omega * grid.times
    jz_error = float(np.max(np.abs(series.jz + np.cos(phase))))
    population_error = float(np.max(np.abs(series.p_minus1 - np.cos(0.5 * phase) ** 4)))
    metadata = {"max jz error": jz_error, "max p_minus1 error": population_error}
    ok = jz_error < 1e-9 and population_error < 1e-9
    return CheckResult.verdict("AC8", ok, "closed-form decoupled traces", metadata)


@register("BLOCK-ORACLE", "analytical blocks equal the excitation-conserving part of the transformed Hamiltonian")
def check_block_oracle() -> CheckResult:
    params = ModelParams(Omega=2.0, g=0.5)
    disp = solve_lambda(params, LambdaStrategy.EXACT_ROOT)
    n_blocks = 10
    dense = build_grwa_hamiltonian(params, disp.lam, FockTruncation(n_blocks + 2))

    block0 = grwa_block0(params, disp)
    worst = float(np.max(np.abs(block0.matrix - dense[np.ix_([1, 5], [1, 5])])))
    for block in grwa_blocks(params, disp, n_blocks):
        n = block.n
        index = [3 * (n - 1), 3 * n + 1, 3 * (n + 1) + 2]
        worst = max(worst, float(np.max(np.abs(block.matrix - dense[np.ix_(index, index)]))))

    # truncated cosh/sinh are exact only away from the Fock edge
    trunc = FockTruncation(PROJECTION_N_MAX)
    interior = 3 * (PROJECTION_INTERIOR + 1)
    projected = project_excitation_conserving(build_transformed_hamiltonian(params, disp.lam, trunc), trunc)
    grwa = build_grwa_hamiltonian(params, disp.lam, trunc)
    projection = float(np.max(np.abs(projected[:interior, :interior] - grwa[:interior, :interior])))

    metadata = {"max block deviation": worst, "max projection deviation": projection}
    ok = worst < ORACLE_TOL and projection < PROJECTION_TOL
    return CheckResult.verdict("BLOCK-ORACLE", ok, f"max entry deviation {max(worst, projection):.3e}", metadata)


@register("STATIONARITY", "exact-root lambda is a stationary point of E_G")
def check_stationarity() -> CheckResult:
    step = 1e-5
    worst_residual, worst_slope = 0.0, 0.0
    for params in _grid():
        lam = solve_lambda(params, LambdaStrategy.EXACT_ROOT).lam
        worst_residual = max(worst_residual, abs(stationarity_residual(params, lam)))
        slope = (energy_function(params, lam + step) - energy_function(params, lam - step)) / (2.0 * step)
        worst_slope = max(worst_slope, abs(slope))
    metadata = {"max residual": worst_residual, "max finite-difference slope": worst_slope}
    ok = worst_residual < 1e-12 and worst_slope < 1e-8
    return CheckResult.verdict("STATIONARITY", ok, "residual and slope at the root", metadata)


@register("LAMBDA-ORDER", "0 <= lambda_closed <= lambda_sc <= lambda_exact <= g/omega")
def check_lambda_order() -> CheckResult:
    violations = []
    for params in _grid():
        chain: Dict[str, float] = {"zero": 0.0}
        for strategy in (LambdaStrategy.CLOSED_FORM, LambdaStrategy.SELF_CONSISTENT, LambdaStrategy.EXACT_ROOT):
            chain[str(strategy)] = solve_lambda(params, strategy).lam
        chain["g/omega"] = params.g / params.omega + ORDER_SLACK
        names = list(chain)
        for lower, upper in zip(names, names[1:]):
            if chain[lower] > chain[upper]:
                violations.append((f"{lower} <= {upper} (g={params.g}, Omega={params.Omega})", chain[lower] - chain[upper]))
    if violations:
        return CheckResult.failure("LAMBDA-ORDER", _worst(violations))
    return CheckResult.success("LAMBDA-ORDER", f"ordering holds on {len(_grid())} grid points")

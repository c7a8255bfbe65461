"""
Unit tests for the exact-diagonalization oracle:
- eig_sym ordering, signs and error handling
- ed_spectrum / ed_converged / ed_mean_photon
- ed_dynamics in the decoupled limit
"""

import numpy as np
import pytest

from qrabi.dynamics import TimeGrid
from qrabi.exact import ed_converged, ed_dynamics, ed_eigensystem, ed_mean_photon, ed_spectrum, eig_sym
from qrabi.exceptions import ConvergenceError, DomainError, NonSymmetricMatrixError, TruncationError
from qrabi.model import FockTruncation, ModelParams, build_hamiltonian


@pytest.fixture
def small_trunc():
    return FockTruncation(40)


def test_eig_sym_orders_and_fixes_signs():
    """Test ascending eigenvalues and the sign convention on eigenvectors."""
    matrix = np.array([[2.0, 1.0, 0.0], [1.0, 2.0, 0.0], [0.0, 0.0, -1.0]])
    system = eig_sym(matrix)
    assert system.values.tolist() == pytest.approx([-1.0, 1.0, 3.0])
    assert system.residual(matrix) < 1e-14
    assert system.orthonormality_error() < 1e-14
    pivots = np.argmax(np.abs(system.vectors), axis=0)
    assert np.all(system.vectors[pivots, np.arange(3)] > 0)


def test_eig_sym_breaks_ties_with_operator():
    """Degenerate levels are ordered by ascending tie-breaker expectation."""
    matrix = np.zeros((2, 2))
    tie_breaker = np.diag([3.0, 1.0])
    system = eig_sym(matrix, tie_breaker=tie_breaker)
    first = system.vectors[:, 0]
    assert first @ tie_breaker @ first == pytest.approx(1.0)


def test_eig_sym_rejects_non_symmetric():
    """Test a non-symmetric matrix is refused."""
    with pytest.raises(NonSymmetricMatrixError):
        eig_sym(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(NonSymmetricMatrixError):
        eig_sym(np.zeros((2, 3)))


def test_decoupled_spectrum(small_trunc):
    """Omega = 1, g = 0 gives (-1, 0, 0)."""
    assert ed_spectrum(ModelParams(Omega=1.0, g=0.0), small_trunc, k=3) == pytest.approx([-1.0, 0.0, 0.0])


def test_spectrum_matches_dense_solver(small_trunc):
    """Test ED levels against numpy's dense eigensolver."""
    params = ModelParams(Omega=2.0, g=0.4)
    expected = np.linalg.eigvalsh(build_hamiltonian(params, small_trunc))[:7]
    assert ed_spectrum(params, small_trunc, k=7, verify=False) == pytest.approx(expected.tolist(), abs=1e-12)


def test_eigensystem_is_cached(small_trunc):
    """Test repeated requests reuse the cached eigensystem."""
    params = ModelParams(Omega=2.0, g=0.3)
    assert ed_eigensystem(params, small_trunc) is ed_eigensystem(params, small_trunc)


def test_convergence_check(small_trunc):
    """Test a converged truncation passes the doubling check."""
    assert ed_converged(ModelParams(Omega=2.0, g=0.2), small_trunc, k=7)
    assert not ed_converged(ModelParams(Omega=1.0, g=1.0), FockTruncation(3), k=7)


def test_unconverged_spectrum_raises():
    """Test a truncation too small for the coupling raises."""
    with pytest.raises(ConvergenceError):
        ed_spectrum(ModelParams(Omega=1.0, g=1.0), FockTruncation(3), k=7)


def test_level_count_out_of_range(small_trunc):
    """Test level counts outside the truncated space are rejected."""
    with pytest.raises(DomainError):
        ed_spectrum(ModelParams(), small_trunc, k=0, verify=False)


def test_mean_photon(small_trunc):
    """Test ED photon numbers of decoupled levels."""
    assert ed_mean_photon(ModelParams(Omega=2.0, g=0.0), small_trunc) == pytest.approx(0.0, abs=1e-14)
    # weak coupling: roughly g^2 / 2 photons dressed by the qubit splitting
    photon = ed_mean_photon(ModelParams(Omega=2.0, g=0.1), small_trunc)
    assert 0.0 < photon < 0.005
    with pytest.raises(DomainError):
        ed_mean_photon(ModelParams(), small_trunc, level=small_trunc.dimension)


def test_decoupled_dynamics(small_trunc):
    """At g = 0: <J_z> = -cos(Omega t) and P_-1 = cos^4(Omega t / 2)."""
    params = ModelParams(Omega=2.0, g=0.0)
    grid = TimeGrid.periods(params.Omega, 5.0, 401)
    series = ed_dynamics(params, 2.0, grid, small_trunc)
    phase = params.Omega * grid.times
    np.testing.assert_allclose(series.jz, -np.cos(phase), atol=1e-9)
    np.testing.assert_allclose(series.p_minus1, np.cos(0.5 * phase) ** 4, atol=1e-9)
    assert series.norm_drift < 1e-12
    assert series.method == "ed"


def test_dynamics_initial_values(small_trunc):
    """Test ED traces start from the prepared state."""
    params = ModelParams(Omega=2.0, g=0.2)
    series = ed_dynamics(params, 2.0, TimeGrid.uniform(1.0, 3), small_trunc)
    assert series.jz[0] == pytest.approx(-1.0, abs=1e-10)
    assert series.p_minus1[0] == pytest.approx(1.0, abs=1e-10)


def test_dynamics_truncation_errors():
    """Test ED dynamics refuses a truncation that cuts the coherent state."""
    grid = TimeGrid.uniform(1.0, 3)
    with pytest.raises(TruncationError):
        ed_dynamics(ModelParams(Omega=2.0, g=0.2), 5.0, grid, FockTruncation(10))
    with pytest.raises(DomainError):
        ed_dynamics(ModelParams(Omega=2.0, g=0.2), -1.0, grid, FockTruncation(10))


def test_eig_sym_random_symmetric_matrix():
    """Test residual and orthonormality on a random symmetric 60 x 60 matrix."""
    rng = np.random.default_rng(2024)
    matrix = rng.normal(size=(60, 60))
    matrix = 0.5 * (matrix + matrix.T)
    system = eig_sym(matrix)
    assert np.all(np.diff(system.values) >= 0)
    assert system.residual(matrix) < 1e-10
    assert system.orthonormality_error() < 1e-12


def test_levels_do_not_rise_with_truncation():
    """Test the lowest levels are non-increasing as n_max grows."""
    params = ModelParams(Omega=2.0, g=0.6)
    previous = None
    for n_max in (5, 10, 20, 40):
        levels = np.array(ed_spectrum(params, FockTruncation(n_max), k=7, verify=False))
        if previous is not None:
            assert np.all(levels <= previous + 1e-12)
        previous = levels


def test_coupled_dynamics_conserves_norm(small_trunc):
    """Test the norm and the physical bounds of the ED traces at g = 0.3."""
    params = ModelParams(Omega=2.0, g=0.3)
    series = ed_dynamics(params, 2.0, TimeGrid.periods(params.Omega, 20.0, 801), small_trunc)
    assert series.norm_drift < 1e-10
    assert np.all(np.abs(series.jz) <= 1.0 + 1e-9)
    assert np.all((series.p_minus1 >= -1e-9) & (series.p_minus1 <= 1.0 + 1e-9))

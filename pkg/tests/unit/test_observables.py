"""Unit tests for the mean-photon-number observables and level matching."""

import math

import numpy as np
import pytest

from qrabi.exact import ed_mean_photon, ed_spectrum
from qrabi.exceptions import DomainError
from qrabi.model import FockTruncation, ModelParams
from qrabi.observables import (
    grwa_chi0,
    match_levels,
    photon_ground_grwa,
    photon_ground_variational,
    photon_levels,
    photon_manifold0,
)
from qrabi.vgrwa import (
    LambdaStrategy,
    assemble_adiabatic_spectrum,
    assemble_spectrum,
    grwa_block0,
    solve_lambda,
    solve_lambda_adiabatic,
)


def test_grwa_ground_photon_value():
    params = ModelParams(Omega=2.0, g=0.1)
    assert grwa_chi0(params) == pytest.approx(0.0071065, abs=1e-7)
    assert photon_ground_grwa(params) == pytest.approx(5.01256e-3, rel=1e-5)


def test_grwa_photon_needs_splitting():
    with pytest.raises(DomainError):
        grwa_chi0(ModelParams(Omega=0.0, g=0.1))


def test_variational_ground_photon():
    params = ModelParams(Omega=2.0, g=0.3)
    disp = solve_lambda(params)
    assert photon_ground_variational(disp) == pytest.approx(0.5 * 0.1**2)


@pytest.mark.parametrize("Omega", [1.0, 2.0, 5.0, 10.0])
def test_ground_photon_ordering(Omega):
    """photon_grwa > g^2/2 > photon_vgrwa, and vgrwa lies closer to ED."""
    params = ModelParams(Omega=Omega, g=0.1)
    variational = photon_ground_variational(solve_lambda(params))
    grwa = photon_ground_grwa(params)
    exact = ed_mean_photon(params, FockTruncation(40))
    assert grwa > 0.005 > variational
    assert abs(variational - exact) < abs(grwa - exact)


def test_large_splitting_limit():
    params = ModelParams(Omega=100.0, g=0.1)
    assert photon_ground_variational(solve_lambda(params)) < 1e-5
    assert photon_ground_grwa(params) == pytest.approx(0.005, abs=1e-4)


def test_decoupled_photon_levels():
    """At g = 0 every level carries an integer photon number."""
    params = ModelParams(Omega=1.5, g=0.0)
    table = assemble_spectrum(params, solve_lambda(params), 5)
    photons = [p.value for p in photon_levels(params, table, 4)]
    assert photons == pytest.approx([0.0, 1.0, 0.0, 2.0], abs=1e-12)


def test_excited_levels_follow_exact_photons():
    params = ModelParams(Omega=1.5, g=0.05)
    table = assemble_spectrum(params, solve_lambda(params), 10)
    photons = [p.value for p in photon_levels(params, table, 4)]
    trunc = FockTruncation(40)
    exact = [ed_mean_photon(params, trunc, level) for level in range(4)]
    np.testing.assert_allclose(photons, exact, atol=1e-2)


def test_grwa_ground_uses_closed_form():
    params = ModelParams(Omega=2.0, g=0.1)
    table = assemble_spectrum(params, solve_lambda(params, LambdaStrategy.GRWA_FIXED), 5)
    ground = photon_levels(params, table, 1)[0]
    assert ground.method == "grwa"
    assert ground.level == "g"
    assert ground.chi0_grwa == pytest.approx(grwa_chi0(params))
    assert ground.value == pytest.approx(photon_ground_grwa(params))


def test_manifold0_photons_are_bounded():
    params = ModelParams(Omega=2.0, g=0.4)
    disp = solve_lambda(params)
    block0 = grwa_block0(params, disp)
    for j in range(2):
        value = photon_manifold0(block0, j, disp)
        assert 0.0 <= value <= (1.0 + disp.lam) ** 2


def test_adiabatic_photon_levels():
    params = ModelParams(Omega=2.0, g=0.0)
    table = assemble_adiabatic_spectrum(params, solve_lambda_adiabatic(params), 4)
    photons = photon_levels(params, table, 3)
    assert [p.method for p in photons] == ["adiabatic"] * 3
    assert [p.value for p in photons] == pytest.approx([0.0, 1.0, 0.0], abs=1e-12)


def test_match_levels():
    assert match_levels([0.1, 1.0], [1.05, 0.0, 2.0]) == [(0, 1), (1, 0)]
    with pytest.raises(DomainError):
        match_levels([0.0, 1.0, 2.0], [0.0, 1.0])


def test_match_levels_with_spectra():
    params = ModelParams(Omega=2.0, g=0.3)
    table = assemble_spectrum(params, solve_lambda(params), 10)
    exact = ed_spectrum(params, FockTruncation(40), k=9, verify=False)
    pairs = match_levels([level.energy for level in table.lowest(7)], exact)
    assert len(pairs) == 7
    assert len({column for _, column in pairs}) == 7
    assert all(math.isfinite(exact[column]) for _, column in pairs)

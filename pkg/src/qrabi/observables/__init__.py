from .photon import (
    PhotonObservable,
    grwa_chi0,
    match_levels,
    photon_adiabatic,
    photon_ground_grwa,
    photon_ground_variational,
    photon_levels,
    photon_manifold0,
    photon_manifold_n,
)

__all__ = [
    "PhotonObservable",
    "grwa_chi0",
    "match_levels",
    "photon_adiabatic",
    "photon_ground_grwa",
    "photon_ground_variational",
    "photon_levels",
    "photon_manifold0",
    "photon_manifold_n",
]

from .commands import cmd_dynamics, cmd_photon, cmd_spectrum, cmd_validate
from .config import DynamicsConfig, Method, OutputFormat, SweepConfig, load_config_file, resolve_config
from .main import EXIT_CHECK_FAILED, EXIT_CONFIG, EXIT_CONVERGENCE, EXIT_OK, build_parser, main

__all__ = [
    "DynamicsConfig",
    "EXIT_CHECK_FAILED",
    "EXIT_CONFIG",
    "EXIT_CONVERGENCE",
    "EXIT_OK",
    "Method",
    "OutputFormat",
    "SweepConfig",
    "build_parser",
    "cmd_dynamics",
    "cmd_photon",
    "cmd_spectrum",
    "cmd_validate",
    "load_config_file",
    "main",
    "resolve_config",
]

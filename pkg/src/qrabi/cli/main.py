"""
``qrabi`` command-line entry point.

Subcommands: spectrum, photon, dynamics, validate. Data goes to stdout or
--output; logs and the progress counter go to stderr.

Exit codes: 0 success, 1 failed validation check, 2 invalid configuration,
3 exact-diagonalization convergence or dynamics truncation failure.
"""

import argparse
import sys
from typing import List, Optional

from qrabi.config import settings
from qrabi.exceptions import ConfigError, ConvergenceError, DomainError, FockOverflowError, TruncationError
from qrabi.logging import LogLevels, configure_logging, logger
from qrabi.validation import MUTATIONS
from qrabi.vgrwa import LambdaStrategy

from .commands import cmd_dynamics, cmd_photon, cmd_spectrum, cmd_validate
from .config import DynamicsConfig, OutputFormat, SweepConfig, load_config_file, resolve_config
from .output import DEVIATION_COLUMNS, DYNAMICS_COLUMNS, STATIC_COLUMNS, emit, render

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2
EXIT_CONVERGENCE = 3

# namespace entries that are not configuration fields
_RUNTIME_KEYS = {"command", "config", "quiet", "log_level", "level", "mutate"}


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="Flat key = value config file; flags take precedence.")
    parser.add_argument("--omega", type=float, help="Oscillator frequency (default 1).")
    parser.add_argument("--Omega", type=float, help="Qubit splitting.")
    parser.add_argument("--g", type=float, help="Coupling strength.")
    parser.add_argument("--methods", help="Comma-separated subset of ed,vgrwa,grwa,adiabatic.")
    parser.add_argument(
        "--lambda-strategy",
        dest="lambda_strategy",
        choices=[strategy.value for strategy in LambdaStrategy],
        help="Displacement used by the vgrwa method (default closed-form).",
    )
    parser.add_argument("--n-max", dest="n_max", type=int, help="Fock truncation of exact diagonalization.")
    parser.add_argument("--format", choices=[fmt.value for fmt in OutputFormat], help="Output format (default csv).")
    parser.add_argument("--output", help="Output path; '-' or absent writes to stdout.")
    parser.add_argument("--quiet", action="store_true", default=False, help="Hide the progress counter.")


def _sweep(parser: argparse.ArgumentParser) -> None:
    _common(parser)
    parser.add_argument("--g-min", dest="g_min", type=float)
    parser.add_argument("--g-max", dest="g_max", type=float)
    parser.add_argument("--g-steps", dest="g_steps", type=int)
    parser.add_argument("--Omega-min", dest="Omega_min", type=float)
    parser.add_argument("--Omega-max", dest="Omega_max", type=float)
    parser.add_argument("--Omega-steps", dest="Omega_steps", type=int)
    parser.add_argument("--levels", type=int, help="Number of lowest levels reported (default 7).")
    parser.add_argument("--n-blocks", dest="n_blocks", type=int, help="Manifolds solved per point.")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qrabi", description="Two-qubit quantum Rabi model solvers.")
    parser.add_argument(
        "--log-level",
        dest="log_level",
        choices=[level.value for level in LogLevels],
        default=None,
        help="stderr log level (default from QRABI_LOG_LEVEL).",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    spectrum = subparsers.add_parser("spectrum", help="Energy levels along a g or Omega sweep.")
    _sweep(spectrum)
    spectrum.add_argument(
        "--diagnostics",
        action="store_true",
        default=None,
        help="Also report lambda and the counter-rotating coefficients.",
    )

    photon = subparsers.add_parser("photon", help="Mean photon numbers along a g or Omega sweep.")
    _sweep(photon)

    dynamics = subparsers.add_parser("dynamics", help="<J_z>(t) and P_-1(t) from |-1_z> x |alpha>.")
    _common(dynamics)
    dynamics.add_argument("--alpha", type=float, help="Coherent amplitude (default 2).")
    dynamics.add_argument("--t-periods", dest="t_periods", type=float, help="Window length in units of 2 pi / Omega.")
    dynamics.add_argument("--samples", type=int, help="Uniform time samples.")
    dynamics.add_argument("--cutoff", type=int, help="Manifolds kept by the analytical evolution.")

    validate = subparsers.add_parser("validate", help="Run the acceptance suite.")
    validate.add_argument("level", nargs="?", choices=["fast", "full"], default="fast")
    validate.add_argument("--mutate", choices=sorted(MUTATIONS), help="Corrupt one constant to prove the suite fails.")
    return parser


def _flags(args: argparse.Namespace) -> dict:
    return {key: value for key, value in vars(args).items() if key not in _RUNTIME_KEYS}


def run(args: argparse.Namespace) -> int:
    if args.command == "validate":
        report = cmd_validate(level=args.level, mutate=args.mutate)
        sys.stdout.write(report.render())
        return EXIT_OK if report.passed else EXIT_CHECK_FAILED

    file_values = load_config_file(args.config)
    if args.command == "dynamics":
        config = resolve_config(DynamicsConfig, file_values, _flags(args))
        rows, meta, with_deviation = cmd_dynamics(config, quiet=args.quiet)
        columns = DYNAMICS_COLUMNS + (DEVIATION_COLUMNS if with_deviation else [])
    else:
        config = resolve_config(SweepConfig, file_values, _flags(args))
        command = cmd_spectrum if args.command == "spectrum" else cmd_photon
        rows, meta = command(config, quiet=args.quiet)
        columns = STATIC_COLUMNS

    emit(render(rows, columns, meta, config.format), config.output)
    logger.info(f"{args.command}: wrote {len(rows)} rows")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level or settings.runtime.log_level, settings.runtime.log_file)
    try:
        return run(args)
    except (ConfigError, DomainError, FockOverflowError) as e:
        logger.error(f"Invalid configuration: {e}")
        sys.stderr.write(f"qrabi: configuration error: {e}\n")
        return EXIT_CONFIG
    except (ConvergenceError, TruncationError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        sys.stderr.write(f"qrabi: {e}\n")
        return EXIT_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())

"""Exception hierarchy shared by the solvers and the command line."""


class QRabiError(Exception):
    """Base class for every error raised by qrabi"""


class DomainError(QRabiError, ValueError):
    """Argument outside the mathematical domain of an operation"""


class FockOverflowError(QRabiError):
    """Requested Fock index exceeds the configured cap"""

    def __init__(self, index: int, cap: int):
        self.index = index
        self.cap = cap
        super().__init__(f"Fock index n + m = {index} exceeds cap {cap}")


class NonSymmetricMatrixError(QRabiError, ValueError):
    """Matrix handed to the symmetric eigensolver is not symmetric"""


class EigenSolverError(QRabiError):
    """Dense eigensolver did not converge"""


class ConvergenceError(QRabiError):
    """Exact-diagonalization levels are not converged in the Fock truncation"""


class TruncationError(QRabiError):
    """Fock cutoff too small to represent the requested state"""


class CubicDegeneracyError(QRabiError):
    """Trigonometric cubic formula is not applicable; a numeric fallback is required"""


class ConfigError(QRabiError, ValueError):
    """Invalid command-line or config-file configuration"""

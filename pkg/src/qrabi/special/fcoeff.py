"""
Displaced-frame coefficient functions F_m(n).

F_m(n) = exp(-lambda^2 / 2) lambda^m n!/(n+m)! L_n^m(lambda^2) is the reduced
matrix element of the displacement exp[lambda (a^dagger - a)] between Fock
levels n and n + m: <n+m| D(lambda) |n> = sqrt((n+m)!/n!) F_m(n).

Tables of F_m(n) over n are cached per (lambda, m, cutoff). Cached arrays are
read-only, so they can be shared between worker threads.
"""

import math
import numbers
from functools import lru_cache
from typing import Optional

import numpy as np
from scipy.special import gammaln

from qrabi.config import settings
from qrabi.exceptions import DomainError, FockOverflowError

from .laguerre import laguerre_sequence

# n + m above which n!/(n+m)! is accumulated in log space
LOG_RATIO_THRESHOLD = 170


def _check_index(name: str, value) -> int:
    if not isinstance(value, numbers.Integral) or value < 0:
        raise DomainError(f"{name} must be a nonnegative integer, got {value!r}")
    return int(value)


def _check_lambda(lam: float) -> float:
    lam = float(lam)
    if not np.isfinite(lam) or lam < 0:
        raise DomainError(f"displacement lambda must be finite and nonnegative, got {lam!r}")
    return lam


def factorial_ratio(n: int, m: int) -> float:
    """n!/(n+m)! as a running product, or through log-gamma when n + m > 170."""
    if n + m > LOG_RATIO_THRESHOLD:
        return math.exp(gammaln(n + 1) - gammaln(n + m + 1))
    ratio = 1.0
    for k in range(1, m + 1):
        ratio /= n + k
    return ratio


def f_coeff(m: int, n: int, lam: float, cap: Optional[int] = None) -> float:
    """
    Evaluate F_m(n) at displacement lambda.

    Args:
        m (int): Order, m >= 0.
        n (int): Fock index, n >= 0.
        lam (float): Displacement, lambda >= 0.
        cap (Optional[int]): Largest admissible n + m. Defaults to the solver setting (4096).

    Returns:
        float: F_m(n).

    Raises:
        DomainError: On negative arguments.
        FockOverflowError: If n + m exceeds the cap.
    """
    m = _check_index("order m", m)
    n = _check_index("Fock index n", n)
    lam = _check_lambda(lam)
    cap = settings.solver.fock_cap if cap is None else cap
    if n + m > cap:
        raise FockOverflowError(n + m, cap)

    if lam == 0.0:
        return 1.0 if m == 0 else 0.0

    x = lam * lam
    laguerre = laguerre_sequence(n, m, x)[-1]
    return math.exp(-0.5 * x) * lam**m * factorial_ratio(n, m) * laguerre


@lru_cache(maxsize=512)
def _cached_table(lam: float, m: int, cutoff: int) -> np.ndarray:
    x = lam * lam
    if lam == 0.0:
        table = np.full(cutoff + 1, 1.0 if m == 0 else 0.0)
    else:
        ratios = np.array([factorial_ratio(n, m) for n in range(cutoff + 1)])
        table = math.exp(-0.5 * x) * lam**m * ratios * laguerre_sequence(cutoff, m, x)
    table.setflags(write=False)
    return table


def fcoeff_table(lam: float, m: int, cutoff: int, cap: Optional[int] = None) -> np.ndarray:
    """
    Read-only vector of F_m(n) for n = 0..cutoff.

    Args:
        lam (float): Displacement, lambda >= 0.
        m (int): Order, m >= 0.
        cutoff (int): Highest Fock index in the table.
        cap (Optional[int]): Largest admissible cutoff + m.

    Returns:
        np.ndarray: Shape (cutoff + 1,), immutable.
    """
    m = _check_index("order m", m)
    cutoff = _check_index("cutoff", cutoff)
    lam = _check_lambda(lam)
    cap = settings.solver.fock_cap if cap is None else cap
    if cutoff + m > cap:
        raise FockOverflowError(cutoff + m, cap)
    return _cached_table(lam, m, cutoff)


def displacement_matrix_elements(lam: float, size: int, parity: str, max_order: int = 4) -> np.ndarray:
    """
    Assemble cosh or sinh of lambda (a^dagger - a) from F_m(n), truncated at order max_order.

    The lower triangle carries (a^dagger)^m F_m(a^dagger a), i.e.
    <n+m|.|n> = sqrt((n+m)!/n!) F_m(n). The upper triangle follows from the
    parity: cosh is symmetric and sinh antisymmetric in the real Fock basis.
    Entries with |row - column| > max_order are left at zero.

    Args:
        lam (float): Displacement.
        size (int): Number of Fock levels (matrix dimension).
        parity (str): "even" for cosh, "odd" for sinh.
        max_order (int): Highest order m assembled.

    Returns:
        np.ndarray: Real (size, size) matrix.
    """
    if parity not in ("even", "odd"):
        raise DomainError(f"parity must be 'even' or 'odd', got {parity!r}")
    start = 0 if parity == "even" else 1
    sign = 1.0 if parity == "even" else -1.0
    out = np.zeros((size, size))
    for m in range(start, min(max_order, size - 1) + 1, 2):
        table = fcoeff_table(lam, m, size - 1 - m)
        for n in range(size - m):
            element = table[n] / math.sqrt(factorial_ratio(n, m))
            out[n + m, n] = element
            if m:
                out[n, n + m] = sign * element
    return out

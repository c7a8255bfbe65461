"""Associated Laguerre polynomials by ascending three-term recurrence."""

import numbers

import numpy as np

from qrabi.exceptions import DomainError


def _check_order(name: str, value) -> int:
    if not isinstance(value, numbers.Integral) or value < 0:
        raise DomainError(f"{name} must be a nonnegative integer, got {value!r}")
    return int(value)


def _check_argument(x: float) -> float:
    x = float(x)
    if not np.isfinite(x) or x < 0:
        raise DomainError(f"Laguerre argument must be finite and nonnegative, got {x!r}")
    return x


def laguerre_sequence(n_max: int, m: int, x: float) -> np.ndarray:
    """
    Associated Laguerre polynomials of all degrees up to n_max.

    Args:
        n_max (int): Highest degree.
        m (int): Order.
        x (float): Argument, x >= 0.

    Returns:
        np.ndarray: Shape (n_max + 1,); entry n holds L_n^m(x).
    """
    n_max = _check_order("degree", n_max)
    m = _check_order("order", m)
    x = _check_argument(x)

    out = np.empty(n_max + 1)
    out[0] = 1.0
    if n_max == 0:
        return out
    out[1] = m + 1.0 - x

    # (k+1) L(k+1) = (2k + m + 1 - x) L(k) - (k + m) L(k-1)
    for k in range(1, n_max):
        out[k + 1] = ((2 * k + m + 1 - x) * out[k] - (k + m) * out[k - 1]) / (k + 1)
    return out


def laguerre_assoc(n: int, m: int, x: float) -> float:
    """
    Associated Laguerre polynomial L_n^m(x).

    The closed factorial sum cancels catastrophically for large n, so the
    value is always produced by the ascending recurrence in n at fixed m.

    Raises:
        DomainError: If n, m or x is negative.
    """
    return float(laguerre_sequence(n, m, x)[-1])

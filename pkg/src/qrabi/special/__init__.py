from .fcoeff import displacement_matrix_elements, f_coeff, factorial_ratio, fcoeff_table
from .laguerre import laguerre_assoc, laguerre_sequence

__all__ = [
    "displacement_matrix_elements",
    "f_coeff",
    "factorial_ratio",
    "fcoeff_table",
    "laguerre_assoc",
    "laguerre_sequence",
]

from .checks import CHECKS, Check
from .mutations import MUTATIONS, Mutation, clear_caches
from .results import REPORT_HEADER, CheckResult, CheckStatus, ValidationReport
from .suite import LEVELS, run_check, run_validation

__all__ = [
    "CHECKS",
    "Check",
    "CheckResult",
    "CheckStatus",
    "LEVELS",
    "MUTATIONS",
    "Mutation",
    "REPORT_HEADER",
    "ValidationReport",
    "clear_caches",
    "run_check",
    "run_validation",
]

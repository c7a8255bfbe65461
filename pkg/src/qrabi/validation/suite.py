import time
from contextlib import nullcontext
from typing import Optional

from qrabi.exceptions import ConfigError
from qrabi.logging import logger

from .checks import CHECKS, Check
from .mutations import MUTATIONS
from .results import CheckResult, ValidationReport

LEVELS = ("fast", "full")


def run_check(check: Check, level: str) -> CheckResult:
    """Run one check; exceptions become failures so the suite always completes."""
    if check.full_only and level != "full":
        return CheckResult.skipped(check.check_id, "full level only")
    start = time.perf_counter()
    try:
        result = check.func()
    except Exception as e:
        logger.error(f"{check.check_id} raised {type(e).__name__}: {e}")
        result = CheckResult.failure(check.check_id, f"{type(e).__name__}: {e}", error=e)
    result.runtime = time.perf_counter() - start
    logger.info(f"{check.check_id}: {result.status.value} in {result.runtime:.2f}s ({result.message})")
    return result


def run_validation(level: str = "fast", mutate: Optional[str] = None) -> ValidationReport:
    """
    Run every registered check at the given level.

    Args:
        level (str): "fast" skips the long dynamics comparison; "full" runs everything.
        mutate (Optional[str]): Name of a mutation applied for the whole run.

    Returns:
        ValidationReport: Per-check results in registration order.

    Raises:
        ConfigError: On an unknown level or mutation name.
    """
    if level not in LEVELS:
        raise ConfigError(f"validation level must be one of {LEVELS}, got {level!r}")
    if mutate is not None and mutate not in MUTATIONS:
        raise ConfigError(f"unknown mutation {mutate!r}; choose from {sorted(MUTATIONS)}")

    report = ValidationReport(level=level, mutation=mutate)
    start = time.perf_counter()
    with MUTATIONS[mutate].apply() if mutate else nullcontext():
        report.results = [run_check(check, level) for check in CHECKS]
    report.runtime = time.perf_counter() - start

    if report.passed:
        logger.info(f"Validation ({level}) passed in {report.runtime:.2f}s")
    else:
        logger.warning(f"Validation ({level}) failed: {', '.join(report.failed_ids)}")
    return report

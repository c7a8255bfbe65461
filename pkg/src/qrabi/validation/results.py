from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

REPORT_HEADER = (
    "Curve-level comparisons are property-based (orderings, bounds, RMS dominance)\n"
    "against the in-repo exact-diagonalization oracle; no published numeric tables are used."
)


class CheckStatus(Enum):
    SUCCESS = "pass"
    FAILURE = "fail"
    SKIPPED = "skipped"


@dataclass
class CheckResult:
    """Outcome of one acceptance or component check"""

    check_id: str
    status: CheckStatus
    message: str
    error: Optional[Exception] = None
    metadata: Optional[Dict[str, Any]] = None
    runtime: float = 0.0

    @property
    def is_success(self) -> bool:
        return self.status == CheckStatus.SUCCESS

    @property
    def is_failure(self) -> bool:
        return self.status == CheckStatus.FAILURE

    @classmethod
    def success(cls, check_id: str, message: str, metadata: Optional[Dict[str, Any]] = None) -> "CheckResult":
        return cls(check_id, CheckStatus.SUCCESS, message, metadata=metadata)

    @classmethod
    def failure(
        cls,
        check_id: str,
        message: str,
        error: Optional[Exception] = None,
        metadata: Optional[Dict[str, Any]] = None,
    ) -> "CheckResult":
        return cls(check_id, CheckStatus.FAILURE, message, error, metadata)

    @classmethod
    def skipped(cls, check_id: str, message: str) -> "CheckResult":
        return cls(check_id, CheckStatus.SKIPPED, message)

    @classmethod
    def verdict(cls, check_id: str, ok: bool, message: str, metadata: Optional[Dict[str, Any]] = None) -> "CheckResult":
        return cls.success(check_id, message, metadata) if ok else cls.failure(check_id, message, metadata=metadata)


def _format(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_format(item) for item in value) + "]"
    return str(value)


@dataclass
class ValidationReport:
    """Results of one suite run, in check order"""

    level: str
    mutation: Optional[str] = None
    results: List[CheckResult] = field(default_factory=list)
    runtime: float = 0.0

    @property
    def passed(self) -> bool:
        return not any(result.is_failure for result in self.results)

    @property
    def failed_ids(self) -> List[str]:
        return [result.check_id for result in self.results if result.is_failure]

    def render(self) -> str:
        title = f"qrabi validation report (level={self.level}"
        title += f", mutation={self.mutation})" if self.mutation else ")"
        lines = [title, REPORT_HEADER, ""]
        for result in self.results:
            status = result.status.value.upper()
            lines.append(f"{result.check_id:<14} {status:<8} {result.runtime:8.2f}s  {result.message}")
            for key, value in (result.metadata or {}).items():
                lines.append(f"{'':<14} {key}: {_format(value)}")

        counts = {status: sum(r.status == status for r in self.results) for status in CheckStatus}
        lines.append("")
        lines.append(
            f"{counts[CheckStatus.SUCCESS]} passed, {counts[CheckStatus.FAILURE]} failed, "
            f"{counts[CheckStatus.SKIPPED]} skipped in {self.runtime:.2f}s"
        )
        if self.failed_ids:
            lines.append("FAILED: " + ", ".join(self.failed_ids))
        return "\n".join(lines) + "\n"

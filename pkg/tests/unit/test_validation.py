"""
Unit tests for the acceptance suite:
- CheckResult / ValidationReport
- individual component checks, clean and under mutation
- run_validation levels, skipping and error capture
"""

import pytest

from qrabi.exceptions import ConfigError
from qrabi.validation import (
    CHECKS,
    MUTATIONS,
    REPORT_HEADER,
    Check,
    CheckResult,
    CheckStatus,
    ValidationReport,
    run_check,
    run_validation,
)


def by_id(check_id: str) -> Check:
    return next(check for check in CHECKS if check.check_id == check_id)


@pytest.fixture
def fake_checks(monkeypatch):
    def boom():
        raise RuntimeError("solver exploded")

    checks = [
        Check("OK", "always passes", lambda: CheckResult.success("OK", "fine")),
        Check("LONG", "full only", lambda: CheckResult.success("LONG", "fine"), full_only=True),
        Check("BOOM", "raises", boom),
    ]
    monkeypatch.setattr("qrabi.validation.suite.CHECKS", checks)
    return checks


def test_registry_order():
    ids = [check.check_id for check in CHECKS]
    assert ids == [f"AC{k}" for k in range(1, 9)] + ["BLOCK-ORACLE", "STATIONARITY", "LAMBDA-ORDER"]
    assert [check.check_id for check in CHECKS if check.full_only] == ["AC5"]


def test_check_result_constructors():
    assert CheckResult.success("AC1", "ok").is_success
    failure = CheckResult.failure("AC1", "bad", error=ValueError("x"))
    assert failure.is_failure
    assert isinstance(failure.error, ValueError)
    assert CheckResult.skipped("AC5", "later").status is CheckStatus.SKIPPED
    assert CheckResult.verdict("AC2", False, "lost").is_failure


def test_report_render():
    report = ValidationReport(
        level="fast",
        mutation="grwa-diagonal",
        results=[
            CheckResult.success("AC7", "max deviation 1e-15", metadata={"max deviation": 1e-15}),
            CheckResult.failure("BLOCK-ORACLE", "max entry deviation 4"),
        ],
    )
    text = report.render()
    assert not report.passed
    assert report.failed_ids == ["BLOCK-ORACLE"]
    assert REPORT_HEADER in text
    assert "mutation=grwa-diagonal" in text
    assert "max deviation: 1e-15" in text
    assert text.rstrip().endswith("FAILED: BLOCK-ORACLE")


@pytest.mark.parametrize("check_id", ["AC6", "AC7", "AC8", "BLOCK-ORACLE", "STATIONARITY", "LAMBDA-ORDER"])
def test_component_checks_pass(check_id):
    result = run_check(by_id(check_id), "fast")
    assert result.is_success, result.message
    assert result.runtime >= 0.0


def test_block_oracle_covers_transformed_hamiltonian():
    """Test BLOCK-ORACLE also compares the projected transformed Hamiltonian."""
    result = run_check(by_id("BLOCK-ORACLE"), "fast")
    assert result.is_success
    assert result.metadata["max projection deviation"] < 1e-10
    assert result.metadata["max block deviation"] < 1e-10


@pytest.mark.parametrize("name", sorted(MUTATIONS))
def test_mutation_breaks_named_check(name):
    mutation = MUTATIONS[name]
    with mutation.apply():
        result = run_check(by_id(mutation.breaks), "fast")
    assert result.is_failure
    # the patch is undone afterwards
    assert run_check(by_id(mutation.breaks), "fast").is_success


def test_full_only_checks_are_skipped(fake_checks):
    report = run_validation("fast")
    statuses = {result.check_id: result.status for result in report.results}
    assert statuses == {"OK": CheckStatus.SUCCESS, "LONG": CheckStatus.SKIPPED, "BOOM": CheckStatus.FAILURE}
    assert report.failed_ids == ["BOOM"]
    assert "RuntimeError: solver exploded" in report.results[2].message


def test_full_level_runs_everything(fake_checks):
    report = run_validation("full")
    assert [result.status for result in report.results][:2] == [CheckStatus.SUCCESS, CheckStatus.SUCCESS]


def test_invalid_arguments():
    with pytest.raises(ConfigError):
        run_validation("medium")
    with pytest.raises(ConfigError):
        run_validation("fast", mutate="no-such-mutation")


@pytest.mark.slow
def test_fast_suite_passes():
    report = run_validation("fast")
    assert report.passed, report.render()


@pytest.mark.slow
def test_mutated_suite_fails():
    report = run_validation("fast", mutate="closed-form-lambda")
    assert "LAMBDA-ORDER" in report.failed_ids

"""
Acceptance Tests

Full-size runs of the packaged validation suite. These take minutes, so
they are marked slow: `pytest -m slow tests/acceptance`.
"""

import pytest

from fraccauchy.validation import CheckContext, CheckStatus, ValidationSuite, run_suite


@pytest.fixture(scope="module")
def suite():
    return ValidationSuite.from_yaml()


@pytest.mark.slow
def test_full_suite_passes(suite):
    """Every criterion passes at full sample size."""
    report = run_suite(suite, CheckContext(seed=20261018, threads=8))
    failed = {r.check_id: (r.status.value, r.measured, r.error_message) for r in report.get_failed_results()}
    assert report.all_passed, failed
    assert report.total_checks == 10


@pytest.mark.slow
def test_fault_only_breaks_its_check(suite):
    """The switchover fault turns the Mittag-Leffler check red at full size."""
    report = run_suite(suite.select(["1", "2"]), CheckContext(seed=1), fault="switchover")
    statuses = {r.criterion: r.status for r in report.results}
    assert statuses[1] == CheckStatus.FAIL
    assert not report.all_passed

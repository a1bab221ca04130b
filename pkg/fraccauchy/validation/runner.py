"""Suite runner: executes checks, times them, and collects a ValidationReport."""

import logging
from contextlib import nullcontext
from typing import Callable, ContextManager, Dict, Optional

from fraccauchy.core.errors import ConfigError, FracCauchyError
from fraccauchy.specfun import ml_tail_constant, switchover_fault
from fraccauchy.utils import ResourceMonitor
from fraccauchy.validation.checks import CHECKS, CheckContext
from fraccauchy.validation.enums import CheckStatus
from fraccauchy.validation.models import CheckResult, CheckSpec, ValidationReport, ValidationSuite

logger = logging.getLogger(__name__)

FAULTS: Dict[str, Callable[[], ContextManager]] = {
    "switchover": switchover_fault,
}


def run_check(spec: CheckSpec, ctx: CheckContext, monitor: ResourceMonitor) -> CheckResult:
    """Run one check; engine errors become ERROR results instead of propagating."""
    check = CHECKS.get(spec.criterion)
    if check is None:
        raise ConfigError(f"check {spec.id!r} names unknown criterion {spec.criterion}")

    result = CheckResult(check_id=spec.id, criterion=spec.criterion, title=spec.title, status=CheckStatus.ERROR)
    with monitor.track(spec.id) as usage:
        try:
            outcome = check(spec.params, ctx)
        except FracCauchyError as e:
            logger.error(f"check {spec.id} raised {type(e).__name__}: {e}")
            result.error_message = f"{type(e).__name__}: {e}"
        except KeyError as e:
            raise ConfigError(f"check {spec.id!r} is missing parameter {e}")
        else:
            result.status = CheckStatus.PASS if outcome.passed else CheckStatus.FAIL
            result.measured = outcome.measured
            result.threshold = outcome.threshold
            result.detail = outcome.detail
    result.runtime_s = usage.wall_s
    logger.info(f"[{spec.criterion}] {spec.id}: {result.status.value} ({result.runtime_s:.1f}s)")
    return result


def run_suite(
    suite: ValidationSuite,
    ctx: Optional[CheckContext] = None,
    fault: Optional[str] = None,
) -> ValidationReport:
    """
    Run every check of the suite in order.

    Args:
        suite: Checks to run
        ctx: Seed, thread count and sample scale (suite scale by default)
        fault: Name of an injected fault (see FAULTS), for testing the suite itself

    Raises:
        ConfigError: for an unknown fault or a malformed check
    """
    ctx = ctx or CheckContext(scale=suite.scale)
    if fault is not None and fault not in FAULTS:
        raise ConfigError(f"unknown fault {fault!r}; known: {sorted(FAULTS)}")

    monitor = ResourceMonitor()
    report = ValidationReport(suite_version=suite.version, seed=ctx.seed, scale=ctx.scale, fault=fault)
    injected = FAULTS[fault]() if fault else nullcontext()
    try:
        with injected:
            for spec in suite.checks:
                report.add_result(run_check(spec, ctx, monitor))
    finally:
        if fault:
            # constants cached while the fault was active are not trustworthy
            ml_tail_constant.cache_clear()

    report.resources = monitor.get_all_metrics()
    logger.info(
        f"validation: {report.passed_checks}/{report.total_checks} passed, "
        f"{report.failed_checks} failed, {report.error_checks} errors"
    )
    return report

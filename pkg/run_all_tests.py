"""
Test Suite Runner

Runs the pytest suites one after another and prints a combined report:
- Unit tests per package
- CLI integration tests
- Full-size acceptance runs (skipped with --quick)
"""

import json
import re
import subprocess
import sys
import time
from dataclasses import asdict, dataclass
from datetime import datetime
from pathlib import Path
from typing import List, Optional

import click

ROOT = Path(__file__).parent

# (name, path, description, slow)
SUITES = [
    ("Unit Tests - Special Functions", "tests/unit/test_specfun.py", "Gamma and Mittag-Leffler evaluation", False),
    ("Unit Tests - Subordinators", "tests/unit/test_subord.py", "Stable, inverse stable and CTRW samplers", False),
    ("Unit Tests - Distributed Order", "tests/unit/test_distorder.py", "Order measures, eigen solutions, composite subordinator", False),
    ("Unit Tests - Spectral", "tests/unit/test_spectral.py", "Box eigenbasis, projection and tail bounds", False),
    ("Unit Tests - Solvers", "tests/unit/test_solver.py", "Series solutions, L1 scheme and residuals", False),
    ("Unit Tests - Monte Carlo", "tests/unit/test_mcsolver.py", "Killed Brownian motion and block driver", False),
    ("Unit Tests - Validation", "tests/unit/test_validation.py", "Suite loading and runner", False),
    ("Unit Tests - Run Config", "tests/unit/test_runconfig.py", "Config files and overrides", False),
    ("Unit Tests - Reporting", "tests/unit/test_reporting.py", "CSV and text reports", False),
    ("Integration Tests - CLI", "tests/integration/test_cli.py", "Batch commands end to end", False),
    ("Acceptance Tests", "tests/acceptance/test_acceptance.py", "Full validation suite", True),
]

_COUNT = re.compile(r"(\d+) (passed|failed|skipped|errors?|deselected)")


@dataclass
class SuiteResult:
    """Outcome of one pytest invocation."""

    name: str
    description: str
    ok: bool
    seconds: float
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    errors: int = 0
    exit_code: Optional[int] = None
    tail: str = ""

    @property
    def counted(self) -> int:
        return self.passed + self.failed + self.skipped


def run_suite(name: str, path: str, description: str, extra: List[str]) -> SuiteResult:
    """Run pytest on one path and read the counts from its summary line."""
    click.echo(f"\n{'=' * 80}\n{name}: {description}\n{'=' * 80}")
    started = time.perf_counter()
    try:
        proc = subprocess.run(
            [sys.executable, "-m", "pytest", path, "-q", *extra],
            capture_output=True,
            text=True,
            cwd=ROOT,
        )
    except OSError as e:
        click.echo(f"✗ could not start pytest: {e}")
        return SuiteResult(name, description, False, time.perf_counter() - started, tail=str(e))

    result = SuiteResult(
        name,
        description,
        ok=proc.returncode == 0,
        seconds=time.perf_counter() - started,
        exit_code=proc.returncode,
        tail=(proc.stdout + proc.stderr)[-500:],
    )
    summary = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else ""
    for count, kind in _COUNT.findall(summary):
        if kind.startswith("error"):
            result.errors = int(count)
        elif kind != "deselected":
            setattr(result, kind, int(count))

    click.echo(
        f"{'✓' if result.ok else '✗'} {result.passed} passed, {result.failed} failed, "
        f"{result.skipped} skipped, {result.errors} errors in {result.seconds:.1f}s"
    )
    return result


def render(results: List[SuiteResult], started: datetime, finished: datetime) -> str:
    failing = [r for r in results if not r.ok]
    lines = [
        "=" * 80,
        "TEST REPORT",
        "=" * 80,
        f"Started:  {started:%Y-%m-%d %H:%M:%S}",
        f"Finished: {finished:%Y-%m-%d %H:%M:%S} ({(finished - started).total_seconds():.1f}s)",
        "",
        f"Suites: {len(results) - len(failing)}/{len(results)} passed",
        f"Tests:  {sum(r.passed for r in results)} passed, {sum(r.failed for r in results)} failed, "
        f"{sum(r.skipped for r in results)} skipped",
        "",
    ]
    for r in results:
        lines.append(f"  {'✓' if r.ok else '✗'} {r.name} ({r.seconds:.1f}s)")
        if r.counted:
            lines.append(f"      {r.passed} passed, {r.failed} failed, {r.skipped} skipped")
        if not r.ok and r.exit_code is None:
            lines.append(f"      {r.tail}")
    lines.append("=" * 80)
    lines.append("✓ ALL TEST SUITES PASSED" if not failing else f"✗ {len(failing)} TEST SUITE(S) FAILED")
    return "\n".join(lines)


@click.command()
@click.option('--quick', is_flag=True, help='Skip the full-size acceptance runs')
@click.option('--save-report', is_flag=True, help='Write the report to test_report.txt')
@click.option('--save-json', is_flag=True, help='Write per-suite results to test_results.json')
def main(quick: bool, save_report: bool, save_json: bool):
    """Run every test suite and print a combined report."""
    started = datetime.now()
    click.echo(f"fraccauchy tests, {'quick' if quick else 'full'} mode, started {started:%Y-%m-%d %H:%M:%S}")

    results = [
        run_suite(name, path, description, ["-m", "slow"] if slow else [])
        for name, path, description, slow in SUITES
        if not (slow and quick)
    ]
    finished = datetime.now()

    report = render(results, started, finished)
    click.echo(report)
    if save_report:
        (ROOT / "test_report.txt").write_text(report + "\n")
    if save_json:
        payload = {
            "started": started.isoformat(),
            "finished": finished.isoformat(),
            "suites": [asdict(r) for r in results],
        }
        (ROOT / "test_results.json").write_text(json.dumps(payload, indent=2))

    sys.exit(0 if all(r.ok for r in results) else 1)


if __name__ == "__main__":
    main()

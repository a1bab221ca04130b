"""Validation data models

Suite definition loaded from YAML, per-check results, and the aggregated report.
"""

from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml

from fraccauchy.core.errors import ConfigError
from fraccauchy.validation.enums import CheckStatus

DEFAULT_SUITE = Path(__file__).with_name("suite.yaml")


@dataclass(frozen=True)
class CheckSpec:
    """One entry of the suite file

    Attributes:
        id: Short identifier, used for selection and in reports
        criterion: Acceptance criterion number (1-10)
        title: One-line description
        params: Check parameters passed to the check function
    """

    id: str
    criterion: int
    title: str
    params: Dict[str, Any] = field(default_factory=dict)


@dataclass
class ValidationSuite:
    """Collection of checks with metadata

    Attributes:
        version: Suite version (e.g., "1.0")
        created: Creation date (ISO 8601)
        description: Suite purpose
        scale: Multiplier for Monte-Carlo sample counts (1.0 = full size)
        checks: Checks in run order
    """

    version: str
    created: str
    description: str
    checks: List[CheckSpec]
    scale: float = 1.0

    def __post_init__(self):
        if not self.checks:
            raise ConfigError("validation suite must contain at least one check")
        ids = [c.id for c in self.checks]
        if len(ids) != len(set(ids)):
            duplicates = {i for i in ids if ids.count(i) > 1}
            raise ConfigError(f"duplicate check ids in suite: {sorted(duplicates)}")
        if not self.scale > 0.0:
            raise ConfigError(f"suite scale must be positive, got {self.scale}")

    @classmethod
    def from_yaml(cls, yaml_path: Union[str, Path] = DEFAULT_SUITE) -> "ValidationSuite":
        """Load a suite from YAML

        Raises:
            ConfigError: If the file is missing, malformed, or lacks required fields
        """
        try:
            with open(yaml_path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f)
        except FileNotFoundError:
            raise ConfigError(f"validation suite not found: {yaml_path}")
        except yaml.YAMLError as e:
            raise ConfigError(f"invalid YAML syntax in {yaml_path}: {e}")

        if not isinstance(data, dict):
            raise ConfigError(f"{yaml_path}: expected a mapping at top level")
        required = ["version", "created", "description", "checks"]
        missing = [k for k in required if k not in data]
        if missing:
            raise ConfigError(f"missing required fields in {yaml_path}: {missing}")
        if not isinstance(data["checks"], list):
            raise ConfigError(f"{yaml_path}: 'checks' must be a list")

        checks = []
        for i, entry in enumerate(data["checks"]):
            try:
                checks.append(CheckSpec(
                    id=str(entry["id"]),
                    criterion=int(entry["criterion"]),
                    title=str(entry.get("title", "")),
                    params=dict(entry.get("params") or {}),
                ))
            except (KeyError, TypeError, ValueError) as e:
                raise ConfigError(f"{yaml_path}: check #{i + 1} is malformed: {e}")

        return cls(
            version=str(data["version"]),
            created=str(data["created"]),
            description=str(data["description"]).strip(),
            checks=checks,
            scale=float(data.get("scale", 1.0)),
        )

    def select(self, ids: Optional[List[str]]) -> "ValidationSuite":
        """Sub-suite with only the given check ids or criterion numbers, in suite order."""
        if not ids:
            return self
        wanted = {str(i) for i in ids}
        chosen = [c for c in self.checks if c.id in wanted or str(c.criterion) in wanted]
        known = {c.id for c in self.checks} | {str(c.criterion) for c in self.checks}
        unknown = sorted(wanted - known)
        if unknown:
            raise ConfigError(f"unknown checks requested: {unknown}")
        return ValidationSuite(self.version, self.created, self.description, chosen, self.scale)


@dataclass
class CheckResult:
    """Result of one check

    Attributes:
        check_id: Suite identifier of the check
        criterion: Acceptance criterion number
        title: Check description
        status: PASS / FAIL / ERROR
        measured: Worst measured quantity (see `threshold` for its limit)
        threshold: Limit the measured quantity is compared with
        detail: Per-case breakdown, one line per case
        runtime_s: Wall-clock time
        error_message: Engine error for ERROR results
    """

    check_id: str
    criterion: int
    title: str
    status: CheckStatus
    measured: float = float("nan")
    threshold: float = float("nan")
    detail: List[str] = field(default_factory=list)
    runtime_s: float = 0.0
    error_message: Optional[str] = None


@dataclass
class ValidationReport:
    """Aggregated validation results

    Attributes:
        timestamp: ISO 8601 timestamp of the run
        suite_version: Version of the suite file
        seed: Master seed of the Monte-Carlo checks
        scale: Sample-count multiplier used
        fault: Injected fault, if any
        results: Individual check results
        total_checks / passed_checks / failed_checks / error_checks: counts
        total_runtime_s: Sum of check runtimes
        resources: Process and system resource snapshot at the end of the run
    """

    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())
    suite_version: str = ""
    seed: int = 0
    scale: float = 1.0
    fault: Optional[str] = None
    results: List[CheckResult] = field(default_factory=list)
    total_checks: int = 0
    passed_checks: int = 0
    failed_checks: int = 0
    error_checks: int = 0
    total_runtime_s: float = 0.0
    resources: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.results:
            self._calculate_metrics()

    def _calculate_metrics(self):
        self.total_checks = len(self.results)
        self.passed_checks = sum(1 for r in self.results if r.status == CheckStatus.PASS)
        self.failed_checks = sum(1 for r in self.results if r.status == CheckStatus.FAIL)
        self.error_checks = sum(1 for r in self.results if r.status == CheckStatus.ERROR)
        self.total_runtime_s = sum(r.runtime_s for r in self.results)

    def add_result(self, result: CheckResult):
        self.results.append(result)
        self._calculate_metrics()

    @property
    def all_passed(self) -> bool:
        return self.total_checks > 0 and self.passed_checks == self.total_checks

    def get_failed_results(self) -> List[CheckResult]:
        return [r for r in self.results if r.status in (CheckStatus.FAIL, CheckStatus.ERROR)]

    def to_rows(self) -> List[list]:
        """Rows for the CSV summary; runtimes are left out so reruns compare byte for byte."""
        return [
            [r.check_id, r.criterion, r.status.value, r.measured, r.threshold]
            for r in self.results
        ]

"""Text Reporter - human-readable validation summary

Formats a ValidationReport for the terminal or a .txt file.
"""

from fraccauchy.validation import CheckStatus, ValidationReport

RULE = "=" * 70
SUBRULE = "-" * 70


class TextReporter:
    """Render validation reports as plain text"""

    def __init__(self, show_detail: bool = False):
        """
        Args:
            show_detail: Include the per-case lines of passing checks too
        """
        self.show_detail = show_detail

    def render(self, report: ValidationReport) -> str:
        """Formatted report string ready for print()"""
        lines = []

        lines.append(RULE)
        lines.append("FRACCAUCHY VALIDATION REPORT")
        lines.append(RULE)
        lines.append(f"Timestamp: {report.timestamp}")
        lines.append(f"Suite Version: {report.suite_version}")
        lines.append(f"Seed: {report.seed}    Scale: {report.scale:g}")
        if report.fault:
            lines.append(f"Injected Fault: {report.fault}")
        lines.append("")

        lines.append("SUMMARY")
        lines.append(SUBRULE)
        lines.append(f"Passed: {report.passed_checks}/{report.total_checks}")
        if report.failed_checks:
            lines.append(f"Failed: {report.failed_checks}")
        if report.error_checks:
            lines.append(f"Errors: {report.error_checks} checks raised engine errors")
        lines.append(f"Total Runtime: {report.total_runtime_s:.1f} s")
        lines.append("")

        lines.append("CHECKS")
        lines.append(SUBRULE)
        for r in report.results:
            symbol = "✓" if r.status == CheckStatus.PASS else "✗"
            lines.append(
                f"  {symbol} [{r.criterion:>2}] {r.check_id:<18} {r.status.value:<5} "
                f"measured {r.measured:.4g} (limit {r.threshold:.4g})  {r.runtime_s:.1f}s"
            )
            if r.status == CheckStatus.ERROR:
                lines.append(f"      Error: {r.error_message}")
            if self.show_detail or r.status != CheckStatus.PASS:
                for line in r.detail:
                    lines.append(f"      {line}")
        lines.append("")

        if report.resources:
            memory = report.resources.get("memory", {})
            cpu = report.resources.get("cpu", {})
            lines.append("RESOURCES")
            lines.append(SUBRULE)
            lines.append(f"  Process RSS:   {memory.get('process_rss_mb', 0):.0f} MB")
            lines.append(f"  System memory: {memory.get('system_used_percent', 0):.0f}% used")
            lines.append(f"  CPUs:          {cpu.get('num_cpus', 0)}")
            lines.append("")

        lines.append(RULE)
        return "\n".join(lines)

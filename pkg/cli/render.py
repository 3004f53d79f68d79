"""
Human-readable Output
Plain or ANSI-coloured rendering of a Report
"""

from typing import Dict, List

from checkers.report import CheckRecord, Report, Verdict


class Color:
    """ANSI color codes untuk output"""
    GREEN = '\033[92m'
    RED = '\033[91m'
    YELLOW = '\033[93m'
    BLUE = '\033[94m'
    RESET = '\033[0m'
    BOLD = '\033[1m'


VERDICT_COLORS: Dict[Verdict, str] = {
    Verdict.PASS: Color.GREEN,
    Verdict.FAIL: Color.RED,
    Verdict.HYPOTHESIS_NOT_MET: Color.YELLOW,
    Verdict.SKIPPED: Color.BLUE,
}

# Detail keys worth a line of their own in human output
HIGHLIGHT_KEYS = (
    'prediction', 'A', 'B', 'P', 'Q', 'left', 'right',
    'distinct_outcomes', 'merge_orders', 'min', 'max', 'exact_sum',
)


class Renderer:
    def __init__(self, color: bool = False, include_timing: bool = False):
        self.color = color
        self.include_timing = include_timing

    def paint(self, text: str, code: str) -> str:
        if not self.color:
            return text
        return f"{code}{text}{Color.RESET}"

    def verdict_tag(self, verdict: Verdict) -> str:
        return self.paint(f"[{verdict.value.upper()}]", VERDICT_COLORS[verdict])

    def record_lines(self, record: CheckRecord) -> List[str]:
        head = f"{self.verdict_tag(record.verdict)} {record.check_id}  ({record.anchor})"
        if self.include_timing and record.duration is not None:
            head += f"  {record.duration:.3f}s"
        lines = [head]
        if record.message:
            lines.append(f"    {record.message}")
        for key in HIGHLIGHT_KEYS:
            if key in record.details and record.details[key] is not None:
                lines.append(f"    {key}: {record.details[key]}")
        if record.witness is not None:
            lines.append('    witness:')
            lines.extend(f"      {key} = {value}" for key, value in sorted(record.witness.items()))
        return lines

    def render(self, report: Report) -> str:
        lines = [
            self.paint(f"{report.tool} {report.version}: {report.command}", Color.BOLD),
            '=' * 70,
        ]
        for key in sorted(report.bounds):
            value = report.bounds[key]
            if isinstance(value, dict):
                value = ', '.join(f"{k}={v}" for k, v in sorted(value.items()))
            lines.append(f"{key}: {value}")
        lines.append('-' * 70)
        for record in report.records:
            lines.extend(self.record_lines(record))
        if report.notes:
            lines.append('-' * 70)
            lines.extend(f"note: {note}" for note in report.notes)
        counts = report.verdict_counts()
        lines.append('=' * 70)
        lines.append(
            ', '.join(f"{name} {counts[name]}" for name in sorted(counts) if counts[name])
            + f"; exit {report.status()}"
        )
        return '\n'.join(lines) + '\n'


def render_report(report: Report, color: bool = False, include_timing: bool = False) -> str:
    return Renderer(color, include_timing).render(report)

from typing import Any, Iterable, List, Sequence

from models import SweepReport, TheoremReport


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "✅ Yes" if value else "❌ No"
    if value is None:
        return "*Not set*"
    if isinstance(value, (list, tuple)):
        return ", ".join(str(v) for v in value)
    return f"`{value}`"


def markdown_table(headers: Sequence[str], rows: Iterable[Sequence[Any]]) -> List[str]:
    lines = [
        "| " + " | ".join(headers) + " |",
        "|" + "|".join("-" * (len(h) + 2) for h in headers) + "|",
    ]
    for row in rows:
        lines.append("| " + " | ".join(_cell(v) for v in row) + " |")
    return lines


def sweep_table(reports: Iterable[SweepReport]) -> List[str]:
    return markdown_table(
        ["Shape", "Semantics", "Patterns", "Filtered", "Uncolorable"],
        (
            (
                "(" + ",".join(str(k) for k in r.shape) + ")",
                r.semantics,
                r.total,
                r.filtered,
                len(r.uncolorable),
            )
            for r in reports
        ),
    )


def theorem_lines(report: TheoremReport) -> List[str]:
    lines = [f"# Theorem {report.theorem}: {report.claim}", ""]
    lines.extend(markdown_table(
        ["Check", "Expected", "Observed", "Passed"],
        ((c.name, c.expected, c.observed, c.passed) for c in report.checks),
    ))
    if report.witness:
        lines.extend(["", f"Witness: {report.witness}"])
    lines.extend(["", f"Result: {'pass' if report.passed else 'FAIL'}"])
    return lines

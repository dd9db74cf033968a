import json
from typing import Optional

from pydantic import ValidationError

from cais_resilience.contracts.phase import Phase
from cais_resilience.contracts.report import ResilienceReport
from cais_resilience.exceptions.common_exceptions import ReportInvalidException

NOT_AVAILABLE = "n/a"


def write_report(report: ResilienceReport) -> bytes:
    """
    Serialise a report as JSON with a fixed key order.

    Absent measures (incomplete runs, empty spans) are omitted rather than null.
    """
    data = report.model_dump(mode="json", exclude_none=True)
    return (json.dumps(data, indent=2) + "\n").encode("utf-8")


def read_report(data: bytes) -> ResilienceReport:
    try:
        return ResilienceReport.model_validate_json(data)
    except ValidationError as exc:
        first = exc.errors(include_url=False)[0]
        location = ".".join(str(item) for item in first["loc"]) or "report"
        raise ReportInvalidException(f"{location}: {first['msg']}") from exc


def _ratio(value: Optional[float]) -> str:
    return NOT_AVAILABLE if value is None else f"{value:.2f}"


def _count(value: Optional[int]) -> str:
    return NOT_AVAILABLE if value is None else str(value)


def format_report_table(report: ResilienceReport) -> str:
    """Human-readable table of the resilience measures and the phase lengths."""
    rows: list[tuple[str, str]] = [
        ("Complete", "yes" if report.complete else "no"),
        ("State Length", _count(report.steady_length)),
        ("ACR Threshold", _ratio(report.acr_threshold)),
        ("PUT", _count(report.put)),
        ("PAT", _count(report.pat)),
        ("PUT Ratio", _ratio(report.put_ratio)),
        ("PAT Ratio", _ratio(report.pat_ratio)),
        ("HI Average", _ratio(report.hi_average)),
        ("Recovered (1st)", "yes" if report.recovered.first else "no"),
        ("Recovered (2nd)", "yes" if report.recovered.second else "no"),
    ]
    if report.second_episode is not None:
        second = report.second_episode
        rows += [
            ("2nd PUT", _count(second.put)),
            ("2nd PAT", _count(second.pat)),
            ("2nd PUT Ratio", _ratio(second.put_ratio)),
            ("2nd PAT Ratio", _ratio(second.pat_ratio)),
            ("2nd HI Average", _ratio(second.hi_average)),
        ]
    rows += [(f"Length {phase.title}", str(report.state_lengths.get(phase.value, 0))) for phase in Phase]
    if report.anomalies:
        rows.append(("Anomalies", ", ".join(f"{a.kind}@{a.index}" for a in report.anomalies)))

    width = max(len(name) for name, _ in rows)
    lines = [f"{'Measure'.ljust(width)}  Value", f"{'-' * width}  -----"]
    lines += [f"{name.ljust(width)}  {value}" for name, value in rows]
    return "\n".join(lines)

import logging
from pathlib import Path

from cais_resilience.core.monitor import MonitorRun
from cais_resilience.exceptions.common_exceptions import AppException
from cais_resilience.utils.plot_utils import render_plot
from cais_resilience.utils.report_utils import write_report
from cais_resilience.utils.timeline_utils import write_timeline

TIMELINE_FILE = "timeline.csv"
REPORT_FILE = "report.json"
PLOT_FILE = "plot.svg"
TRACE_FILE = "trace.jsonl"


def write_file(directory: Path, name: str, content: bytes) -> Path:
    try:
        directory.mkdir(parents=True, exist_ok=True)
        path = directory / name
        path.write_bytes(content)
    except OSError as exc:
        raise AppException(f"Cannot write {directory / name}: {exc.strerror}") from exc
    logging.debug(f"💾 Wrote {path}")
    return path


def write_outputs(run: MonitorRun, directory: Path) -> list[Path]:
    """Write timeline, report and (for non-empty runs) plot."""
    written = [
        write_file(directory, TIMELINE_FILE, write_timeline(run.timeline)),
        write_file(directory, REPORT_FILE, write_report(run.report)),
    ]
    if run.timeline:
        svg = render_plot([entry.acr for entry in run.timeline], run.phase_history, run.report.acr_threshold)
        written.append(write_file(directory, PLOT_FILE, svg))
    else:
        logging.info("Empty run: no plot written")
    return written


def phase_summary(run: MonitorRun) -> str:
    sequence = run.phase_sequence
    if not sequence:
        return "no iterations"
    return " → ".join(phase.title for phase in sequence)

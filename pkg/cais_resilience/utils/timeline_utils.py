"""CSV timeline: one row per iteration with the derived ACR and phase."""

import csv
import io
from typing import Iterable, Optional, Sequence

from cais_resilience.contracts.iteration_event import IterationEvent, Mode
from cais_resilience.contracts.monitor_config import MonitorConfig
from cais_resilience.contracts.phase import Phase
from cais_resilience.core.monitor import TimelineEntry, monitor_events
from cais_resilience.exceptions.trace_exceptions import MalformedLineException
from cais_resilience.utils.serialisation import format_bool, parse_bool

TIMELINE_COLUMNS = ("index", "epsilon", "mode", "human_intervened", "acr", "phase")


def format_acr(acr: float) -> str:
    return f"{acr:.6f}"


def write_timeline(timeline: Sequence[TimelineEntry]) -> bytes:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TIMELINE_COLUMNS)
    for entry in timeline:
        writer.writerow([
            entry.event.index,
            repr(entry.event.epsilon),
            entry.event.mode.value,
            format_bool(entry.event.human_intervened),
            format_acr(entry.acr),
            entry.phase.value,
        ])
    return buffer.getvalue().encode("utf-8")


def read_timeline(
    data: bytes,
    *,
    fix_indices: Optional[Iterable[int]] = None,
    config: Optional[MonitorConfig] = None,
) -> list[TimelineEntry]:
    """
    Rebuild a timeline and re-verify its derived columns against the monitor.

    The ACR column is always checked. Phases depend on fix events, which the CSV
    does not carry: they are checked only when `fix_indices` is given.
    """
    rows = list(csv.reader(io.StringIO(data.decode("utf-8"))))
    if not rows or tuple(rows[0]) != TIMELINE_COLUMNS:
        raise MalformedLineException(1, f"expected header {','.join(TIMELINE_COLUMNS)}")

    fixes = set(fix_indices or ())
    events: list[IterationEvent] = []
    written: list[tuple[str, Phase]] = []
    for offset, row in enumerate(rows[1:]):
        line_number = offset + 2
        if len(row) != len(TIMELINE_COLUMNS):
            raise MalformedLineException(line_number, f"expected {len(TIMELINE_COLUMNS)} fields, got {len(row)}")
        try:
            index, epsilon, mode, human, acr, phase = row
            events.append(IterationEvent(
                index=int(index),
                epsilon=float(epsilon),
                mode=Mode(mode),
                human_intervened=parse_bool(human),
                fix_event=int(index) in fixes,
            ))
            written.append((acr, Phase(phase)))
        except ValueError as exc:
            raise MalformedLineException(line_number, str(exc)) from exc
        if events[-1].index != offset:
            raise MalformedLineException(line_number, f"expected index {offset}, found {events[-1].index}")

    run = monitor_events(events, config)
    for offset, (entry, (acr, phase)) in enumerate(zip(run.timeline, written)):
        if format_acr(entry.acr) != acr:
            raise MalformedLineException(offset + 2, f"acr {acr} does not match recomputed {format_acr(entry.acr)}")
        if fix_indices is not None and entry.phase is not phase:
            raise MalformedLineException(offset + 2, f"phase {phase.value} does not match recomputed {entry.phase.value}")

    if fix_indices is not None:
        return run.timeline
    return [TimelineEntry(entry.event, entry.acr, phase) for entry, (_, phase) in zip(run.timeline, written)]

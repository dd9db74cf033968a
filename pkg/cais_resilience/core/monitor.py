from dataclasses import dataclass
from typing import Iterable, Optional

from cais_resilience.contracts.iteration_event import IterationEvent
from cais_resilience.contracts.monitor_config import MonitorConfig
from cais_resilience.contracts.phase import Phase, PhaseLabel
from cais_resilience.contracts.report import ResilienceReport
from cais_resilience.core.acr_window import AcrPoint, AcrWindow
from cais_resilience.core.report import compute_report
from cais_resilience.core.state_machine import ResilienceStateMachine


@dataclass(frozen=True, slots=True)
class TimelineEntry:
    event: IterationEvent
    acr: float
    phase: Phase


@dataclass(frozen=True)
class MonitorRun:
    timeline: list[TimelineEntry]
    report: ResilienceReport
    phase_history: list[PhaseLabel]

    @property
    def phase_sequence(self) -> list[Phase]:
        """Distinct phases in the order they were entered."""
        sequence: list[Phase] = []
        for entry in self.timeline:
            if not sequence or sequence[-1] is not entry.phase:
                sequence.append(entry.phase)
        return sequence


class ResilienceMonitor:
    """One ACR window and one state machine fed by a single event stream."""

    def __init__(self, config: Optional[MonitorConfig] = None):
        self.config = config or MonitorConfig()
        self.window = AcrWindow(self.config.window_size)
        self.state_machine = ResilienceStateMachine(self.config)
        self.events: list[IterationEvent] = []
        self.acr_series: list[AcrPoint] = []

    def consume(self, event: IterationEvent) -> PhaseLabel:
        """Feed one event; returns the provisional label of that iteration."""
        point = self.window.push(event.contribution_bit)
        self.state_machine.step(point, event)
        self.events.append(event)
        self.acr_series.append(point)
        return self.state_machine.phase_history[-1]

    def finish(self) -> MonitorRun:
        self.state_machine.close()
        history = self.state_machine.phase_history
        report = compute_report(
            history,
            self.acr_series,
            self.events,
            config=self.config,
            anomalies=self.state_machine.anomalies,
        )
        timeline = [
            TimelineEntry(event, point.acr, label.phase)
            for event, point, label in zip(self.events, self.acr_series, history)
        ]
        return MonitorRun(timeline=timeline, report=report, phase_history=list(history))


def monitor_events(events: Iterable[IterationEvent], config: Optional[MonitorConfig] = None) -> MonitorRun:
    monitor = ResilienceMonitor(config)
    for event in events:
        monitor.consume(event)
    return monitor.finish()

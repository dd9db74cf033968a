"""Monitor core: decision rule, ACR window, phase state machine and report."""

from .acr_window import AcrPoint, AcrWindow, acr_series, acr_series_bruteforce, push_contribution
from .decision import EventOutcome, PendingMode, decide_mode, finalize_event
from .monitor import MonitorRun, ResilienceMonitor, TimelineEntry, monitor_events
from .report import compute_report, episode_measures
from .state_machine import ResilienceStateMachine
from .stopwatch import Stopwatch

__all__ = [
    # window
    "AcrPoint",
    "AcrWindow",
    "acr_series",
    "acr_series_bruteforce",
    "push_contribution",
    # decision
    "EventOutcome",
    "PendingMode",
    "decide_mode",
    "finalize_event",
    # monitor
    "MonitorRun",
    "ResilienceMonitor",
    "TimelineEntry",
    "monitor_events",
    # report
    "compute_report",
    "episode_measures",
    # state machine
    "ResilienceStateMachine",
    # stopwatch
    "Stopwatch",
]

"""
cais_resilience - resilience modeling for collaborative AI systems

This package tracks how a system that learns online from a human performs
over time:
- ACR window over autonomous vs human-handled iterations
- Phase state machine (steady, disruptive, recovered) with retrospective recovery
- Resilience measures (ACR threshold, state length, PUT/PAT, HI average)
- A seeded simulator of an online colour classifier with a lights-off disruption
- Trace ingestion, CSV/JSON/SVG writers and a command line tool
"""

__version__ = "0.1.0"
__author__ = "Patrik Mojzis"
__email__ = "patrikm53@gmail.com"
__license__ = "MIT"
__url__ = "https://github.com/patrikmojzis/cais-resilience"

from .contracts import (
    BoxClass,
    DegradationTrigger,
    IterationEvent,
    Mode,
    MonitorConfig,
    Phase,
    PhaseLabel,
    RecoveryComparison,
    ResilienceReport,
    ScenarioConfig,
)
from .core import (
    AcrPoint,
    AcrWindow,
    ResilienceMonitor,
    ResilienceStateMachine,
    Stopwatch,
    acr_series_bruteforce,
    compute_report,
    decide_mode,
    finalize_event,
    monitor_events,
    push_contribution,
)
from .simulation import IncrementalClassifier, ScenarioRun, next_object, run_scenario

__all__ = [
    # contracts
    "BoxClass",
    "DegradationTrigger",
    "IterationEvent",
    "Mode",
    "MonitorConfig",
    "Phase",
    "PhaseLabel",
    "RecoveryComparison",
    "ResilienceReport",
    "ScenarioConfig",
    # core
    "AcrPoint",
    "AcrWindow",
    "ResilienceMonitor",
    "ResilienceStateMachine",
    "Stopwatch",
    "acr_series_bruteforce",
    "compute_report",
    "decide_mode",
    "finalize_event",
    "monitor_events",
    "push_contribution",
    # simulation
    "IncrementalClassifier",
    "ScenarioRun",
    "next_object",
    "run_scenario",
]

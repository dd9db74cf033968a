from .iteration_event import BoxClass, IterationEvent, Mode
from .monitor_config import DegradationTrigger, MonitorConfig, RecoveryComparison
from .phase import FIRST_SPAN, SECOND_SPAN, Anomaly, Phase, PhaseLabel
from .report import AnomalyRecord, EpisodeMeasures, RecoveryFlags, ResilienceReport
from .scenario_config import DEFAULT_CLASS_MEANS, ScenarioConfig

__all__ = [
    "BoxClass",
    "IterationEvent",
    "Mode",
    "DegradationTrigger",
    "MonitorConfig",
    "RecoveryComparison",
    "FIRST_SPAN",
    "SECOND_SPAN",
    "Anomaly",
    "Phase",
    "PhaseLabel",
    "AnomalyRecord",
    "EpisodeMeasures",
    "RecoveryFlags",
    "ResilienceReport",
    "DEFAULT_CLASS_MEANS",
    "ScenarioConfig",
]

from typing import Iterable, Optional, Sequence

from cais_resilience.contracts.iteration_event import IterationEvent
from cais_resilience.contracts.monitor_config import MonitorConfig, RecoveryComparison
from cais_resilience.contracts.phase import FIRST_SPAN, SECOND_SPAN, Anomaly, Phase, PhaseLabel
from cais_resilience.contracts.report import (
    AnomalyRecord,
    EpisodeMeasures,
    RecoveryFlags,
    ResilienceReport,
)
from cais_resilience.core.acr_window import AcrPoint
from cais_resilience.exceptions.monitor_exceptions import MonitorContractException


def compute_report(
    phase_history: Sequence[PhaseLabel],
    acr_series: Sequence[AcrPoint],
    events: Sequence[IterationEvent],
    *,
    config: Optional[MonitorConfig] = None,
    anomalies: Iterable[Anomaly] = (),
) -> ResilienceReport:
    """
    Compute the resilience rules and measures of a finished stream.

    The ACR threshold is the minimum ACR over the points labelled FirstSteady;
    the state length is their count.
    """
    if not len(phase_history) == len(acr_series) == len(events):
        raise MonitorContractException(
            f"Phase history ({len(phase_history)}), ACR series ({len(acr_series)}) "
            f"and events ({len(events)}) must have the same length."
        )
    config = config or MonitorConfig()
    phases = [label.phase for label in phase_history]
    state_lengths = {phase.value: phases.count(phase) for phase in Phase}
    anomaly_records = [AnomalyRecord(index=anomaly.index, kind=anomaly.kind) for anomaly in anomalies]
    recovered = RecoveryFlags(first=Phase.RECOVERED in phases, second=Phase.SECOND_STEADY in phases)

    steady_points = [point.acr for point, phase in zip(acr_series, phases) if phase is Phase.FIRST_STEADY]
    if not steady_points:
        return ResilienceReport(
            complete=False,
            state_lengths=state_lengths,
            recovered=recovered,
            anomalies=anomaly_records,
        )

    threshold = min(steady_points)
    first = episode_measures(phases, acr_series, events, FIRST_SPAN, threshold, config.recovery_comparison)
    second = None
    if any(phase in SECOND_SPAN for phase in phases):
        second = episode_measures(phases, acr_series, events, SECOND_SPAN, threshold, config.recovery_comparison)

    return ResilienceReport(
        complete=True,
        acr_threshold=threshold,
        steady_length=len(steady_points),
        state_lengths=state_lengths,
        span_length=first.span_length,
        put=first.put,
        pat=first.pat,
        put_ratio=first.put_ratio,
        pat_ratio=first.pat_ratio,
        human_interventions=first.human_interventions,
        hi_average=first.hi_average,
        recovered=recovered,
        second_episode=second,
        anomalies=anomaly_records,
    )


def episode_measures(
    phases: Sequence[Phase],
    acr_series: Sequence[AcrPoint],
    events: Sequence[IterationEvent],
    span: frozenset[Phase],
    threshold: float,
    comparison: RecoveryComparison = RecoveryComparison.GREATER_OR_EQUAL,
) -> EpisodeMeasures:
    """PUT, PAT and HI Average over the iterations whose phase lies in `span`."""
    span_indices = [index for index, phase in enumerate(phases) if phase in span]
    if not span_indices:
        return EpisodeMeasures()

    pat = sum(1 for index in span_indices if comparison.qualifies(acr_series[index].acr, threshold))
    put = len(span_indices) - pat
    interventions = sum(1 for index in span_indices if events[index].human_intervened)
    return EpisodeMeasures(
        span_length=len(span_indices),
        put=put,
        pat=pat,
        put_ratio=put / len(span_indices),
        pat_ratio=pat / len(span_indices),
        human_interventions=interventions,
        hi_average=interventions / len(span_indices),
    )

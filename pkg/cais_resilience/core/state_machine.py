import logging
from typing import Optional

from cais_resilience.contracts.iteration_event import IterationEvent
from cais_resilience.contracts.monitor_config import DegradationTrigger, MonitorConfig
from cais_resilience.contracts.phase import Anomaly, Phase, PhaseLabel
from cais_resilience.core.acr_window import AcrPoint
from cais_resilience.exceptions.monitor_exceptions import MonitorContractException

FIX_BEFORE_RECOVERY = "fix_before_recovery"
DEGRADATION_BEFORE_FIX = "degradation_before_fix"


class ResilienceStateMachine:
    """
    Labels every iteration with a resilience phase.

    Transitions follow the chain InitialLearning → FirstSteady → FirstDisruptive →
    Recovered → SecondDisruptive → SecondSteady. Recovery is confirmed
    retrospectively: once `steady_length` consecutive points qualify against the
    ACR threshold, the recovered phase is back-dated to the iteration after the
    last point under the threshold and the history is relabelled.

    Single writer: `step` must not be called concurrently.
    """

    def __init__(self, config: Optional[MonitorConfig] = None):
        self.config = config or MonitorConfig()
        self.current_phase = Phase.INITIAL_LEARNING
        self.acr_threshold: Optional[float] = None
        self.steady_length: Optional[int] = None
        self.last_below_index: Optional[int] = None
        self.phase_history: list[PhaseLabel] = []
        self.anomalies: list[Anomaly] = []
        self._steady_start: Optional[int] = None
        self._steady_min: Optional[float] = None
        self._qualifying_run = 0
        self._fix_seen = False
        self._degraded_before_fix = False

    def step(self, point: AcrPoint, event: IterationEvent) -> Phase:
        index = len(self.phase_history)
        if event.index != index or point.index != index:
            raise MonitorContractException(
                f"Events must be consumed in index order: expected {index}, "
                f"got event {event.index} / point {point.index}."
            )

        if event.fix_event:
            self._on_fix(index)

        match self.current_phase:
            case Phase.INITIAL_LEARNING:
                self._step_initial_learning(point)
            case Phase.FIRST_STEADY:
                self._step_first_steady(point)
            case Phase.FIRST_DISRUPTIVE:
                self._step_disruptive(point, recovered_phase=Phase.RECOVERED)
            case Phase.RECOVERED:
                self._step_recovered(point)
            case Phase.SECOND_DISRUPTIVE:
                self._step_disruptive(point, recovered_phase=Phase.SECOND_STEADY)
            case Phase.SECOND_STEADY:
                self._label(index, Phase.SECOND_STEADY)

        return self.phase_history[-1].phase

    def close(self) -> None:
        """Mark the stream as ended: provisional labels become final."""
        for label in self.phase_history:
            label.confirmed = True

    @property
    def phases(self) -> list[Phase]:
        return [label.phase for label in self.phase_history]

    def _label(self, index: int, phase: Phase, confirmed: bool = True) -> None:
        self.phase_history.append(PhaseLabel(index, phase, confirmed))

    def _enter(self, phase: Phase, index: int) -> None:
        logging.debug(f"🔀 {self.current_phase.title} → {phase.title} at iteration {index}")
        self.current_phase = phase

    def _on_fix(self, index: int) -> None:
        if self.current_phase.rank < Phase.RECOVERED.rank:
            logging.warning(f"⚠️ Fix event at iteration {index} before recovery; recorded as anomaly")
            self.anomalies.append(Anomaly(index, FIX_BEFORE_RECOVERY))
        self._fix_seen = True

    def _degradation_fires(self, acr: float) -> bool:
        if self.config.degradation_trigger is DegradationTrigger.EXACT_ZERO:
            return acr == 0.0
        level = self.acr_threshold if self.acr_threshold is not None else self.config.degradation_level
        return acr < level

    def _step_initial_learning(self, point: AcrPoint) -> None:
        if point.acr >= 1.0:
            self._enter(Phase.FIRST_STEADY, point.index)
            self._steady_start = point.index
            self._steady_min = point.acr
        self._label(point.index, self.current_phase)

    def _step_first_steady(self, point: AcrPoint) -> None:
        assert self._steady_start is not None and self._steady_min is not None
        if not self._degradation_fires(point.acr):
            self._steady_min = min(self._steady_min, point.acr)
            self._label(point.index, Phase.FIRST_STEADY)
            return

        self.acr_threshold = self._steady_min
        self.steady_length = point.index - self._steady_start
        logging.debug(f"📏 ACR threshold {self.acr_threshold} over a steady length of {self.steady_length}")
        self._enter(Phase.FIRST_DISRUPTIVE, point.index)
        self._mark_below(point.index)
        self._label(point.index, Phase.FIRST_DISRUPTIVE)

    def _step_recovered(self, point: AcrPoint) -> None:
        if self._degradation_fires(point.acr):
            if self._fix_seen:
                self._enter(Phase.SECOND_DISRUPTIVE, point.index)
                self._mark_below(point.index)
                self._label(point.index, Phase.SECOND_DISRUPTIVE)
                return
            if not self._degraded_before_fix:
                self.anomalies.append(Anomaly(point.index, DEGRADATION_BEFORE_FIX))
            self._degraded_before_fix = True
        else:
            self._degraded_before_fix = False
        self._label(point.index, Phase.RECOVERED)

    def _step_disruptive(self, point: AcrPoint, *, recovered_phase: Phase) -> None:
        assert self.acr_threshold is not None and self.steady_length is not None
        disruptive_phase = self.current_phase
        if not self.config.recovery_comparison.qualifies(point.acr, self.acr_threshold):
            self._mark_below(point.index)
            self._label(point.index, disruptive_phase)
            return

        self._qualifying_run += 1
        self._label(point.index, disruptive_phase, confirmed=False)
        if self._qualifying_run < self.steady_length:
            return

        assert self.last_below_index is not None
        for label in self.phase_history[self.last_below_index + 1:]:
            label.phase = recovered_phase
            label.confirmed = True
        logging.debug(
            f"✅ Recovery confirmed at iteration {point.index}, "
            f"back-dated to {self.last_below_index + 1}"
        )
        self._enter(recovered_phase, self.last_below_index + 1)

    def _mark_below(self, index: int) -> None:
        # points of an interrupted qualifying run stay in the disruptive phase
        if self.last_below_index is not None:
            for label in self.phase_history[self.last_below_index + 1:]:
                label.confirmed = True
        self.last_below_index = index
        self._qualifying_run = 0

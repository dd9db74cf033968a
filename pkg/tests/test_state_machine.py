import pytest

from cais_resilience.contracts import (
    DegradationTrigger,
    MonitorConfig,
    Phase,
    RecoveryComparison,
)
from cais_resilience.contracts.phase import Anomaly
from cais_resilience.core import AcrPoint, ResilienceMonitor, ResilienceStateMachine
from cais_resilience.core.state_machine import DEGRADATION_BEFORE_FIX, FIX_BEFORE_RECOVERY
from cais_resilience.exceptions import MonitorContractException

from .conftest import drive, make_event, make_events


def _first_episode():
    """Steady 0..33 (min 0.4 at 10), degradation at 34, below 35..39, qualifying 40..73."""
    steady = [1.0] * 34
    steady[10] = 0.4
    return steady + [0.0] + [0.2] * 5 + [0.6] * 34


def test_first_all_ones_frame_enters_first_steady():
    monitor = ResilienceMonitor(MonitorConfig(window_size=5))
    for event in make_events([0] * 8 + [1] * 5):
        monitor.consume(event)
    phases = [label.phase for label in monitor.finish().phase_history]
    assert phases[:12] == [Phase.INITIAL_LEARNING] * 12
    assert phases[12] is Phase.FIRST_STEADY


def test_threshold_is_minimum_of_first_steady():
    machine = drive([0.2, 1.0, 0.6, 0.4, 0.8, 1.0, 0.0])
    assert machine.current_phase is Phase.FIRST_DISRUPTIVE
    assert machine.acr_threshold == pytest.approx(0.4)
    assert machine.steady_length == 5
    assert machine.phases[1:6] == [Phase.FIRST_STEADY] * 5


def test_qualifying_points_stay_provisional_until_confirmed():
    machine = drive(_first_episode()[:73])
    assert machine.current_phase is Phase.FIRST_DISRUPTIVE
    assert machine.phase_history[72].phase is Phase.FIRST_DISRUPTIVE
    assert machine.phase_history[72].confirmed is False
    assert machine.phase_history[39].confirmed is True


def test_recovery_is_back_dated_after_last_below_point():
    machine = drive(_first_episode())
    assert machine.steady_length == 34
    assert machine.current_phase is Phase.RECOVERED
    assert machine.last_below_index == 39
    assert machine.phases[34:40] == [Phase.FIRST_DISRUPTIVE] * 6
    assert machine.phases[40:74] == [Phase.RECOVERED] * 34
    assert all(label.confirmed for label in machine.phase_history)


def test_interrupted_run_stays_disruptive():
    acrs = _first_episode()[:40] + [0.6] * 11 + [0.2] + [0.6] * 34
    machine = drive(acrs)
    assert machine.phases[40:52] == [Phase.FIRST_DISRUPTIVE] * 12
    assert all(label.confirmed for label in machine.phase_history[40:52])
    assert machine.phases[52:86] == [Phase.RECOVERED] * 34


def test_second_episode_after_fix():
    acrs = _first_episode() + [0.6] * 13 + [0.0] + [0.6] * 34 + [0.0]
    machine = drive(acrs, fixes=[86])
    phases = machine.phases
    assert phases[87] is Phase.SECOND_DISRUPTIVE
    assert phases[88:122] == [Phase.SECOND_STEADY] * 34
    # absorbing
    assert phases[122] is Phase.SECOND_STEADY
    assert machine.anomalies == []


def test_fix_before_recovery_is_recorded_and_remembered():
    acrs = _first_episode() + [0.0]
    machine = drive(acrs, fixes=[36])
    assert machine.anomalies == [Anomaly(36, FIX_BEFORE_RECOVERY)]
    assert machine.phases[74] is Phase.SECOND_DISRUPTIVE


def test_degradation_before_fix_stays_recovered():
    acrs = _first_episode() + [0.0, 0.0, 0.6, 0.6, 0.0]
    machine = drive(acrs, fixes=[77])
    assert machine.phases[74:78] == [Phase.RECOVERED] * 4
    assert machine.anomalies == [Anomaly(74, DEGRADATION_BEFORE_FIX)]
    assert machine.phases[78] is Phase.SECOND_DISRUPTIVE


def test_below_threshold_trigger_uses_degradation_level_first():
    config = MonitorConfig(degradation_trigger=DegradationTrigger.BELOW_THRESHOLD, degradation_level=0.4)
    machine = drive([1.0, 0.8, 0.4, 0.2], config=config)
    assert machine.phases == [Phase.FIRST_STEADY] * 3 + [Phase.FIRST_DISRUPTIVE]
    assert machine.acr_threshold == pytest.approx(0.4)
    assert machine.steady_length == 3


@pytest.mark.parametrize(
    "comparison, expected",
    [
        (RecoveryComparison.GREATER_OR_EQUAL, Phase.RECOVERED),
        (RecoveryComparison.STRICTLY_GREATER, Phase.FIRST_DISRUPTIVE),
    ],
)
def test_recovery_comparison_at_threshold(comparison, expected):
    machine = drive([1.0, 0.4, 0.0, 0.4, 0.4], config=MonitorConfig(recovery_comparison=comparison))
    assert machine.steady_length == 2
    assert machine.current_phase is expected


def test_out_of_order_step_raises():
    machine = ResilienceStateMachine()
    with pytest.raises(MonitorContractException):
        machine.step(AcrPoint(1, 0.0), make_event(1, 0))


def test_phases_never_move_backwards():
    acrs = _first_episode() + [0.6] * 13 + [0.0] + [0.6] * 40
    machine = drive(acrs, fixes=[86])
    ranks = [phase.rank for phase in machine.phases]
    assert ranks == sorted(ranks)

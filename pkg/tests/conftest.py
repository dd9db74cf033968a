"""Pytest configuration and shared fixtures for cais_resilience tests."""

from typing import Iterable, Optional, Sequence

import pytest

from cais_resilience.contracts import IterationEvent, Mode, MonitorConfig, ScenarioConfig
from cais_resilience.core import AcrPoint, ResilienceStateMachine
from cais_resilience.simulation import ScenarioRun, run_scenario


def make_event(index: int, bit: int, *, fix_event: bool = False) -> IterationEvent:
    """Autonomous iteration for bit 1, human-handled learning iteration for bit 0."""
    if bit:
        return IterationEvent(index=index, epsilon=0.9, mode=Mode.OPERATING, human_intervened=False, fix_event=fix_event)
    return IterationEvent(index=index, epsilon=0.1, mode=Mode.LEARNING, human_intervened=True, fix_event=fix_event)


def make_events(bits: Sequence[int], fixes: Iterable[int] = ()) -> list[IterationEvent]:
    fix_set = set(fixes)
    return [make_event(index, bit, fix_event=index in fix_set) for index, bit in enumerate(bits)]


def drive(
    acrs: Sequence[float],
    *,
    fixes: Iterable[int] = (),
    config: Optional[MonitorConfig] = None,
) -> ResilienceStateMachine:
    """Step a fresh state machine through a scripted ACR series."""
    fix_set = set(fixes)
    machine = ResilienceStateMachine(config)
    for index, acr in enumerate(acrs):
        machine.step(AcrPoint(index, acr), make_event(index, 1 if acr > 0 else 0, fix_event=index in fix_set))
    return machine


@pytest.fixture(scope="session")
def default_run() -> ScenarioRun:
    return run_scenario(ScenarioConfig())


@pytest.fixture
def clean_env(monkeypatch):
    for name in ("LOG_LEVEL", "LOG_FILE_NAME", "ENV"):
        monkeypatch.delenv(name, raising=False)

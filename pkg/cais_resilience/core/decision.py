"""Decision rule of the online learning loop: compare the confidence level with K."""

from enum import Enum
from typing import NamedTuple

from cais_resilience.contracts.iteration_event import Mode
from cais_resilience.exceptions.monitor_exceptions import MonitorContractException


class PendingMode(str, Enum):
    LEARNING = "learning"
    OPERATING_PENDING = "operating_pending"


class EventOutcome(NamedTuple):
    mode: Mode
    human_intervened: bool
    contribution_bit: int


def _check_ratio(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise MonitorContractException(f"{name} must lie in [0, 1], got {value!r}.")


def decide_mode(epsilon: float, k_threshold: float) -> PendingMode:
    """
    Learning when the confidence level is strictly below K.

    The operating outcome stays pending because the human may still correct a
    false positive before the iteration is finalized.
    """
    _check_ratio("epsilon", epsilon)
    _check_ratio("k_threshold", k_threshold)
    if epsilon < k_threshold:
        return PendingMode.LEARNING
    return PendingMode.OPERATING_PENDING


def finalize_event(pending_mode: PendingMode, human_corrected: bool) -> EventOutcome:
    """Resolve a pending mode into the final mode and the bit enqueued in the ACR window."""
    if pending_mode is PendingMode.LEARNING:
        if human_corrected:
            raise MonitorContractException("A learning iteration cannot be corrected as a false positive.")
        return EventOutcome(Mode.LEARNING, True, 0)
    if human_corrected:
        # corrected false positive: the human classified it
        return EventOutcome(Mode.LEARNING, True, 0)
    return EventOutcome(Mode.OPERATING, False, 1)

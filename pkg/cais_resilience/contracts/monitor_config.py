from enum import Enum

from pydantic import BaseModel, ConfigDict

from cais_resilience.contracts.pydantic_types import PositiveInt, Ratio


class DegradationTrigger(str, Enum):
    EXACT_ZERO = "exact_zero"
    BELOW_THRESHOLD = "below_threshold"


class RecoveryComparison(str, Enum):
    GREATER_OR_EQUAL = "greater_or_equal"
    STRICTLY_GREATER = "strictly_greater"

    def qualifies(self, acr: float, threshold: float) -> bool:
        if self is RecoveryComparison.STRICTLY_GREATER:
            return acr > threshold
        return acr >= threshold


class MonitorConfig(BaseModel):
    """
    Settings of the resilience monitor.

    `degradation_level` only matters for the BelowThreshold trigger in the first
    episode, where no ACR threshold exists yet.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    window_size: PositiveInt = 5
    k_threshold: Ratio = 0.40
    degradation_trigger: DegradationTrigger = DegradationTrigger.EXACT_ZERO
    recovery_comparison: RecoveryComparison = RecoveryComparison.GREATER_OR_EQUAL
    degradation_level: Ratio = 0.40

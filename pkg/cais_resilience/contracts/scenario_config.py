from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, model_validator

from cais_resilience.contracts.monitor_config import MonitorConfig
from cais_resilience.contracts.pydantic_types import (
    ColorVector,
    NonNegativeInt,
    PositiveInt,
    Ratio,
)

DEFAULT_CLASS_MEANS: tuple[tuple[float, float, float], ...] = (
    (0.8, 0.2, 0.2),
    (0.2, 0.8, 0.2),
    (0.2, 0.2, 0.8),
)


class ScenarioConfig(BaseModel):
    """
    Parameters of the simulated colour-sorting case study.

    Lights are off for every iteration in [disrupt_at, fix_at). Setting both to
    num_iterations disables the disruption.

    With gains below about 0.5 the restored colours are re-learned before the ACR
    reaches zero after the fix, so no second disruption forms.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    num_iterations: NonNegativeInt = 208
    class_means: Annotated[tuple[ColorVector, ColorVector, ColorVector], Field()] = DEFAULT_CLASS_MEANS
    sensor_noise_sigma: Annotated[float, Field(ge=0.0)] = 0.05
    lights_off_gain: Annotated[float, Field(gt=0.0, le=1.0)] = 0.7
    lights_off_hue_shift: Annotated[int, Field(ge=0, le=2)] = 1
    disrupt_at: NonNegativeInt = 37
    fix_at: NonNegativeInt = 120
    k_threshold: Ratio = 0.40
    window_size: PositiveInt = 5
    softmax_temperature: Annotated[float, Field(gt=0.0)] = 0.05
    ema_rate: Annotated[float, Field(gt=0.0, le=1.0)] = 0.2
    self_training: bool = True
    seed: int = 7

    @model_validator(mode="after")
    def _check_event_schedule(self) -> "ScenarioConfig":
        if self.disrupt_at > self.num_iterations:
            raise ValueError(
                f"disrupt_at ({self.disrupt_at}) must not exceed num_iterations ({self.num_iterations})."
            )
        if self.fix_at > self.num_iterations:
            raise ValueError(f"fix_at ({self.fix_at}) must not exceed num_iterations ({self.num_iterations}).")
        never_disrupts = self.disrupt_at == self.num_iterations
        if self.fix_at < self.disrupt_at or (self.fix_at == self.disrupt_at and not never_disrupts):
            raise ValueError(f"fix_at ({self.fix_at}) must come after disrupt_at ({self.disrupt_at}).")
        return self

    def is_lights_off(self, index: int) -> bool:
        return self.disrupt_at <= index < self.fix_at

    def is_fix_event(self, index: int) -> bool:
        return index == self.fix_at and self.fix_at < self.num_iterations

    def monitor_config(self, base: MonitorConfig | None = None) -> MonitorConfig:
        """MonitorConfig with this scenario's K and window size forwarded into it."""
        base = base or MonitorConfig()
        return base.model_copy(update={"k_threshold": self.k_threshold, "window_size": self.window_size})

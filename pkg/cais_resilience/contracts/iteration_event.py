from enum import Enum, IntEnum
from typing import Optional

from pydantic import BaseModel, ConfigDict, model_validator

from cais_resilience.contracts.pydantic_types import NonNegativeInt, Ratio


class Mode(str, Enum):
    """Final mode of an iteration, after any human correction."""

    LEARNING = "learning"
    OPERATING = "operating"


class BoxClass(IntEnum):
    """Classification targets; the integer value doubles as the tie-break order."""

    BOX1 = 0
    BOX2 = 1
    BOX3 = 2

    @property
    def color(self) -> str:
        return ("red", "green", "blue")[self.value]


class IterationEvent(BaseModel):
    """One classification attempt of the collaborative system."""

    model_config = ConfigDict(frozen=True)

    index: NonNegativeInt
    epsilon: Ratio
    mode: Mode
    human_intervened: bool
    fix_event: bool = False
    true_class: Optional[BoxClass] = None
    predicted_class: Optional[BoxClass] = None

    @model_validator(mode="after")
    def _operating_is_autonomous(self) -> "IterationEvent":
        if self.mode is Mode.OPERATING and self.human_intervened:
            raise ValueError("An operating iteration cannot carry a human intervention.")
        return self

    @property
    def contribution_bit(self) -> int:
        """1 for an autonomous completion, 0 for anything the human handled."""
        return 1 if self.mode is Mode.OPERATING else 0

from dataclasses import dataclass
from enum import Enum


class Phase(str, Enum):
    INITIAL_LEARNING = "initial_learning"
    FIRST_STEADY = "first_steady"
    FIRST_DISRUPTIVE = "first_disruptive"
    RECOVERED = "recovered"
    SECOND_DISRUPTIVE = "second_disruptive"
    SECOND_STEADY = "second_steady"

    @property
    def rank(self) -> int:
        """Position in the admissible transition chain."""
        return _PHASE_ORDER.index(self)

    @property
    def title(self) -> str:
        return _PHASE_TITLES[self]


_PHASE_ORDER = list(Phase)

_PHASE_TITLES = {
    Phase.INITIAL_LEARNING: "InitialLearning",
    Phase.FIRST_STEADY: "FirstSteady",
    Phase.FIRST_DISRUPTIVE: "FirstDisruptive",
    Phase.RECOVERED: "Recovered",
    Phase.SECOND_DISRUPTIVE: "SecondDisruptive",
    Phase.SECOND_STEADY: "SecondSteady",
}

FIRST_SPAN = frozenset({Phase.FIRST_DISRUPTIVE, Phase.RECOVERED})
SECOND_SPAN = frozenset({Phase.SECOND_DISRUPTIVE, Phase.SECOND_STEADY})


@dataclass(slots=True)
class PhaseLabel:
    """
    Phase of one iteration.

    `confirmed` is False while the iteration sits in a qualifying run of a
    disruptive phase that may still be back-dated into a recovery.
    """

    index: int
    phase: Phase
    confirmed: bool = True


@dataclass(frozen=True, slots=True)
class Anomaly:
    index: int
    kind: str

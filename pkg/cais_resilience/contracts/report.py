from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from cais_resilience.contracts.pydantic_types import NonNegativeInt, Ratio


class EpisodeMeasures(BaseModel):
    """PUT/PAT and HI Average over one disruptive span."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    span_length: NonNegativeInt = 0
    put: NonNegativeInt = 0
    pat: NonNegativeInt = 0
    put_ratio: Optional[Ratio] = None
    pat_ratio: Optional[Ratio] = None
    human_interventions: NonNegativeInt = 0
    hi_average: Optional[Ratio] = None


class RecoveryFlags(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    first: bool = False
    second: bool = False


class AnomalyRecord(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    index: NonNegativeInt
    kind: str


class ResilienceReport(BaseModel):
    """
    Resilience rules and measures of one monitored stream.

    The flat first-episode fields cover the span labelled FirstDisruptive or
    Recovered; `second_episode` covers SecondDisruptive and SecondSteady.
    `complete` is False when the stream never reached the first steady state;
    the threshold and every measure derived from it are then absent.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    complete: bool
    acr_threshold: Optional[Ratio] = None
    steady_length: Optional[NonNegativeInt] = None
    state_lengths: dict[str, NonNegativeInt] = Field(default_factory=dict)
    span_length: Optional[NonNegativeInt] = None
    put: Optional[NonNegativeInt] = None
    pat: Optional[NonNegativeInt] = None
    put_ratio: Optional[Ratio] = None
    pat_ratio: Optional[Ratio] = None
    human_interventions: Optional[NonNegativeInt] = None
    hi_average: Optional[Ratio] = None
    recovered: RecoveryFlags = Field(default_factory=RecoveryFlags)
    second_episode: Optional[EpisodeMeasures] = None
    anomalies: list[AnomalyRecord] = Field(default_factory=list)

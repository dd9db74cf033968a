"""
Reusable Pydantic v2 field types for the values the monitor and simulator exchange.

Usage:

    from pydantic import BaseModel
    from cais_resilience.contracts.pydantic_types import Ratio, ColorVector

    class Sample(BaseModel):
        epsilon: Ratio
        features: ColorVector

These annotated types:
- Reject values outside the closed unit interval
- Accept any 3-item sequence for colors and store it as a float tuple
"""

from __future__ import annotations

from typing import Annotated, Any

from pydantic import Field
from pydantic.functional_validators import AfterValidator, BeforeValidator


def _to_color_tuple(value: Any) -> Any:
    if isinstance(value, (list, tuple)) or hasattr(value, "tolist"):
        items = value.tolist() if hasattr(value, "tolist") else list(value)
        return tuple(float(item) for item in items)
    return value


def _check_unit_cube(value: tuple[float, float, float]) -> tuple[float, float, float]:
    if any(channel < 0.0 or channel > 1.0 for channel in value):
        raise ValueError("Color channels must lie in [0, 1].")
    return value


Ratio = Annotated[float, Field(ge=0.0, le=1.0)]
PositiveInt = Annotated[int, Field(ge=1)]
NonNegativeInt = Annotated[int, Field(ge=0)]

ColorVector = Annotated[
    tuple[float, float, float],
    BeforeValidator(_to_color_tuple),
    AfterValidator(_check_unit_cube),
]

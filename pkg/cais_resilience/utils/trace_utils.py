"""Line-delimited JSON traces of iteration events."""

import json
import math
from typing import BinaryIO, Iterable, Literal, Union

from pydantic import BaseModel, ConfigDict, StrictBool, StrictFloat, StrictInt, ValidationError

from cais_resilience.contracts.iteration_event import IterationEvent, Mode
from cais_resilience.exceptions.trace_exceptions import (
    MalformedLineException,
    NonContiguousIndexException,
    OutOfRangeEpsilonException,
)

TraceSource = Union[bytes, BinaryIO, Iterable[bytes]]


class TraceLine(BaseModel):
    """One record of a trace. Unknown keys are ignored; epsilon must be a JSON number."""

    model_config = ConfigDict(extra="ignore")

    index: StrictInt
    epsilon: Union[StrictInt, StrictFloat]
    mode: Literal["learning", "operating"]
    human_intervened: StrictBool
    fix_event: StrictBool = False


def _iter_lines(source: TraceSource) -> Iterable[bytes]:
    if isinstance(source, (bytes, bytearray)):
        return bytes(source).splitlines()
    return source


def read_trace(source: TraceSource) -> list[IterationEvent]:
    """
    Parse and validate a trace, failing fast on the first bad line.

    Blank lines are skipped; line numbers count every physical line from 1.
    """
    events: list[IterationEvent] = []
    for line_number, raw in enumerate(_iter_lines(source), start=1):
        if not raw.strip():
            continue
        events.append(_parse_line(raw, line_number, expected_index=len(events)))
    return events


def _parse_line(raw: bytes, line_number: int, *, expected_index: int) -> IterationEvent:
    try:
        payload = json.loads(raw.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise MalformedLineException(line_number, f"not valid UTF-8 ({exc.reason})") from exc
    except json.JSONDecodeError as exc:
        raise MalformedLineException(line_number, f"invalid JSON ({exc.msg})") from exc
    if not isinstance(payload, dict):
        raise MalformedLineException(line_number, "expected a JSON object")

    try:
        line = TraceLine.model_validate(payload)
    except ValidationError as exc:
        first = exc.errors(include_url=False)[0]
        location = ".".join(str(item) for item in first["loc"])
        raise MalformedLineException(line_number, f"{location}: {first['msg']}") from exc

    if math.isnan(line.epsilon) or not 0.0 <= line.epsilon <= 1.0:
        raise OutOfRangeEpsilonException(line_number, line.epsilon)
    if line.index != expected_index:
        raise NonContiguousIndexException(line_number, expected_index, line.index)

    try:
        return IterationEvent(
            index=line.index,
            epsilon=line.epsilon,
            mode=Mode(line.mode),
            human_intervened=line.human_intervened,
            fix_event=line.fix_event,
        )
    except ValidationError as exc:
        raise MalformedLineException(line_number, exc.errors(include_url=False)[0]["msg"]) from exc


def write_trace(events: Iterable[IterationEvent]) -> bytes:
    lines = [
        json.dumps(
            {
                "index": event.index,
                "epsilon": event.epsilon,
                "mode": event.mode.value,
                "human_intervened": event.human_intervened,
                "fix_event": event.fix_event,
            },
            separators=(",", ":"),
        )
        for event in events
    ]
    return "".join(f"{line}\n" for line in lines).encode("utf-8")

import pytest

from cais_resilience.core import monitor_events
from cais_resilience.exceptions import MalformedLineException
from cais_resilience.utils.timeline_utils import read_timeline, write_timeline

from .conftest import make_events

HEADER = b"index,epsilon,mode,human_intervened,acr,phase\n"


def test_empty_run_writes_header_only():
    assert write_timeline([]) == HEADER


def test_acr_uses_six_decimals():
    run = monitor_events(make_events([1, 1]))
    lines = write_timeline(run.timeline).decode().splitlines()
    assert lines[2] == "1,0.9,operating,false,0.400000,initial_learning"


def test_simulated_timeline_round_trips(default_run):
    data = write_timeline(default_run.timeline)
    fixes = [event.index for event in default_run.events if event.fix_event]
    restored = read_timeline(data, fix_indices=fixes)
    assert [entry.phase for entry in restored] == [entry.phase for entry in default_run.timeline]
    assert [entry.acr for entry in restored] == [entry.acr for entry in default_run.timeline]
    assert [entry.event.epsilon for entry in restored] == [event.epsilon for event in default_run.events]


def test_tampered_acr_is_detected():
    run = monitor_events(make_events([1, 1, 1]))
    data = write_timeline(run.timeline).replace(b"0.600000", b"0.800000")
    with pytest.raises(MalformedLineException) as exc_info:
        read_timeline(data)
    assert exc_info.value.line_number == 4


def test_wrong_header_is_rejected():
    with pytest.raises(MalformedLineException):
        read_timeline(b"index,acr\n")

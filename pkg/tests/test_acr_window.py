import numpy as np
import pytest

from cais_resilience.core import AcrWindow, acr_series_bruteforce, push_contribution
from cais_resilience.core.acr_window import acr_series


def _filled(bits):
    window = AcrWindow(len(bits))
    for bit in bits:
        window.push(bit)
    return window


def test_all_ones_window_stays_at_one():
    window = _filled([1, 1, 1, 1, 1])
    assert push_contribution(window, 1).acr == 1.0


def test_all_zero_window_stays_at_zero():
    window = AcrWindow(5)
    assert list(window.slots) == [0, 0, 0, 0, 0]
    assert push_contribution(window, 0).acr == 0.0


def test_push_dequeues_oldest_slot():
    window = _filled([1, 0, 1, 0, 0])
    point = push_contribution(window, 1)
    assert list(window.slots) == [0, 1, 0, 0, 1]
    assert point.acr == pytest.approx(0.4)
    assert window.running_sum == 2


def test_points_are_indexed_from_zero():
    points = acr_series([1, 1, 0], 5)
    assert [point.index for point in points] == [0, 1, 2]


def test_window_size_must_be_positive():
    with pytest.raises(ValueError):
        AcrWindow(0)


def test_bruteforce_examples():
    assert [p.acr for p in acr_series_bruteforce([1, 1, 1], 5)] == pytest.approx([0.2, 0.4, 0.6])
    assert acr_series_bruteforce([], 5) == []
    assert acr_series_bruteforce([0] * 5 + [1] * 5, 5)[-1].acr == 1.0


def test_window_matches_bruteforce_on_random_streams():
    rng = np.random.default_rng(0)
    for _ in range(1000):
        window_size = int(rng.integers(1, 11))
        bits = rng.integers(0, 2, size=int(rng.integers(1, 10_001))).tolist()
        streamed = np.array([point.acr for point in acr_series(bits, window_size)])
        oracle = np.array([point.acr for point in acr_series_bruteforce(bits, window_size)])
        assert np.array_equal(streamed, oracle)


def test_acr_is_a_multiple_of_the_frame_fraction():
    rng = np.random.default_rng(1)
    bits = rng.integers(0, 2, size=500).tolist()
    for point in acr_series(bits, 5):
        assert 0.0 <= point.acr <= 1.0
        assert round(point.acr * 5, 9) == int(round(point.acr * 5))

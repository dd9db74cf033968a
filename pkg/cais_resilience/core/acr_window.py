"""Sliding time frame of autonomous contributions and the ACR series it produces."""

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True, slots=True)
class AcrPoint:
    index: int
    acr: float


class AcrWindow:
    """
    FIFO of binary contributions, pre-filled with zeros.

    Holds exactly `window_size` slots at all times; `running_sum` mirrors their sum.
    """

    __slots__ = ("window_size", "slots", "running_sum", "_next_index")

    def __init__(self, window_size: int):
        if window_size < 1:
            raise ValueError("window_size must be at least 1.")
        self.window_size = window_size
        self.slots: deque[int] = deque([0] * window_size, maxlen=window_size)
        self.running_sum = 0
        self._next_index = 0

    def push(self, bit: int) -> AcrPoint:
        """Dequeue the oldest slot, enqueue `bit`, and return the new ACR point."""
        self.running_sum += bit - self.slots[0]
        self.slots.append(bit)
        point = AcrPoint(self._next_index, self.running_sum / self.window_size)
        self._next_index += 1
        return point

    @property
    def acr(self) -> float:
        return self.running_sum / self.window_size


def push_contribution(window: AcrWindow, bit: int) -> AcrPoint:
    return window.push(bit)


def acr_series(bits: Iterable[int], window_size: int) -> list[AcrPoint]:
    window = AcrWindow(window_size)
    return [window.push(bit) for bit in bits]


def acr_series_bruteforce(contribution_bits: Sequence[int], window_size: int) -> list[AcrPoint]:
    """
    Independent oracle for the window: sums the last `window_size` bits of the
    zero-prefixed sequence at every index.
    """
    if len(contribution_bits) == 0:
        return []
    padded = np.concatenate([np.zeros(window_size, dtype=np.int64), np.asarray(contribution_bits, dtype=np.int64)])
    cumulative = np.cumsum(padded)
    # window ending at padded position p covers (p - window_size, p]
    sums = cumulative[window_size:] - cumulative[:-window_size]
    return [AcrPoint(index, int(total) / window_size) for index, total in enumerate(sums.tolist())]

from .stopwatch_decorator import stopwatch

__all__ = [
    "stopwatch",
]

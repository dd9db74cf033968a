import logging
import time
from typing import Optional


class Stopwatch:
    """
    A simple stopwatch for timing workflow steps.
    Can be used as a context manager with the 'with' statement.

    Example usage:
        sw = Stopwatch("simulate")
        run = run_scenario(config)
        sw.stop()

        with Stopwatch("render plot"):
            render_plot(series, history, threshold)
    """

    def __init__(self, label: str = "block", *, logger: Optional[logging.Logger] = None):
        self.label = label
        self.logger = logger or logging.getLogger()
        self.start_time = time.perf_counter()
        self.end_time: Optional[float] = None

    def stop(self) -> float:
        self.end_time = time.perf_counter()
        elapsed = self.end_time - self.start_time
        self.logger.info(f"⏱️ {self.label} took {elapsed:.3f}s")
        return elapsed

    def __enter__(self) -> "Stopwatch":
        self.start_time = time.perf_counter()
        self.end_time = None
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        self.stop()

"""Command line interface: `cais-resilience simulate|monitor|report|version`."""

from .main import main, run

__all__ = ["main", "run"]

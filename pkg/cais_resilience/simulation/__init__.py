"""Deterministic simulation of an online colour classifier taught by a human."""

from .classifier import IncrementalClassifier, Prediction
from .scenario import ScenarioRun, run_scenario
from .sensor import ObjectSample, lighting_transform, next_object

__all__ = [
    "IncrementalClassifier",
    "Prediction",
    "ScenarioRun",
    "run_scenario",
    "ObjectSample",
    "lighting_transform",
    "next_object",
]

"""Synthetic colour sensor standing in for the camera above the conveyor belt."""

from dataclasses import dataclass

import numpy as np

from cais_resilience.contracts.iteration_event import BoxClass
from cais_resilience.contracts.scenario_config import ScenarioConfig

NUM_CLASSES = len(BoxClass)


@dataclass(frozen=True, slots=True)
class ObjectSample:
    true_class: BoxClass
    observed_features: tuple[float, float, float]


def lighting_transform(mean: np.ndarray, config: ScenarioConfig) -> np.ndarray:
    """
    Colour seen with the supporting lights off: channels rotated by the hue shift
    (white balance failing in the dark) and dimmed by the gain.
    """
    return config.lights_off_gain * np.roll(mean, config.lights_off_hue_shift)


def next_object(iteration_index: int, config: ScenarioConfig, rng: np.random.Generator) -> ObjectSample:
    """
    Draw the object of one iteration.

    Objects arrive sorted red, green, blue in equal quantities. Noise is drawn on
    every call, even with a zero sigma, so the random stream does not depend on it.
    """
    if not 0 <= iteration_index < config.num_iterations:
        raise IndexError(f"Iteration {iteration_index} outside [0, {config.num_iterations}).")

    true_class = BoxClass(iteration_index % NUM_CLASSES)
    mean = np.asarray(config.class_means[true_class.value], dtype=float)
    if config.is_lights_off(iteration_index):
        mean = lighting_transform(mean, config)
    noise = rng.normal(0.0, config.sensor_noise_sigma, size=3)
    features = np.clip(mean + noise, 0.0, 1.0)
    return ObjectSample(true_class, (float(features[0]), float(features[1]), float(features[2])))

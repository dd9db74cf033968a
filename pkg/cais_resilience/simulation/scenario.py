import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from cais_resilience.contracts.iteration_event import IterationEvent
from cais_resilience.contracts.monitor_config import MonitorConfig
from cais_resilience.contracts.phase import Phase
from cais_resilience.contracts.report import ResilienceReport
from cais_resilience.contracts.scenario_config import ScenarioConfig
from cais_resilience.core.decision import PendingMode, decide_mode, finalize_event
from cais_resilience.core.monitor import MonitorRun, ResilienceMonitor, TimelineEntry
from cais_resilience.simulation.classifier import IncrementalClassifier, Prediction
from cais_resilience.simulation.sensor import next_object


@dataclass(frozen=True)
class ScenarioRun:
    config: ScenarioConfig
    monitor_config: MonitorConfig
    events: list[IterationEvent]
    predictions: list[Prediction]
    run: MonitorRun

    @property
    def timeline(self) -> list[TimelineEntry]:
        return self.run.timeline

    @property
    def report(self) -> ResilienceReport:
        return self.run.report

    @property
    def phase_sequence(self) -> list[Phase]:
        return self.run.phase_sequence


def run_scenario(config: ScenarioConfig, monitor_config: Optional[MonitorConfig] = None) -> ScenarioRun:
    """
    Simulate the colour-sorting case study and monitor it.

    Each iteration draws an object, predicts it and applies the K decision rule.
    The simulated human never mislabels: it teaches the true class whenever the
    robot asks (epsilon < K) or misclassifies (false positive). With self-training
    on, a correct autonomous classification also updates the prototype of the
    class it predicted, so the classifier keeps following a drifting scene.
    """
    resolved = config.monitor_config(monitor_config)
    rng = np.random.default_rng(config.seed)
    classifier = IncrementalClassifier()
    monitor = ResilienceMonitor(resolved)
    events: list[IterationEvent] = []
    predictions: list[Prediction] = []

    logging.debug(f"🤖 Running scenario: {config.num_iterations} iterations, seed {config.seed}")
    for index in range(config.num_iterations):
        sample = next_object(index, config, rng)
        prediction = classifier.predict(sample.observed_features, config.softmax_temperature)
        pending = decide_mode(prediction.epsilon, config.k_threshold)
        false_positive = (
            pending is PendingMode.OPERATING_PENDING and prediction.predicted_class is not sample.true_class
        )
        outcome = finalize_event(pending, false_positive)
        if outcome.human_intervened:
            classifier.learn(sample.observed_features, sample.true_class, config.ema_rate)
        elif config.self_training:
            assert prediction.predicted_class is sample.true_class
            classifier.learn(sample.observed_features, prediction.predicted_class, config.ema_rate)

        event = IterationEvent(
            index=index,
            epsilon=prediction.epsilon,
            mode=outcome.mode,
            human_intervened=outcome.human_intervened,
            fix_event=config.is_fix_event(index),
            true_class=sample.true_class,
            predicted_class=prediction.predicted_class,
        )
        monitor.consume(event)
        events.append(event)
        predictions.append(prediction)

    return ScenarioRun(
        config=config, monitor_config=resolved, events=events, predictions=predictions, run=monitor.finish()
    )

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from cais_resilience.contracts.iteration_event import BoxClass


@dataclass(frozen=True, slots=True)
class Prediction:
    predicted_class: Optional[BoxClass]
    epsilon: float
    probabilities: tuple[float, ...]


class IncrementalClassifier:
    """
    Nearest-prototype colour classifier trained online from human labels.

    Each class keeps an exponential moving average of the features it was taught
    with. A class with a zero count has no prototype.
    """

    def __init__(self, num_classes: int = len(BoxClass)):
        self.prototypes: list[Optional[np.ndarray]] = [None] * num_classes
        self.counts: list[int] = [0] * num_classes

    @property
    def num_classes(self) -> int:
        return len(self.prototypes)

    def predict(self, features: Sequence[float], temperature: float) -> Prediction:
        """
        Softmax over exp(-squared distance / temperature).

        Unseen classes score 1 (logit 0) and dilute the confidence level. Two rules
        decide the predicted class before any tie-break: a class without a prototype
        is never predicted, even when its uniform score equals or beats every seen
        class, and a classifier with no prototype at all predicts None rather than
        Box1. Only ties among classes that have prototypes go to the lowest index.
        """
        query = np.asarray(features, dtype=float)
        logits = np.zeros(self.num_classes)
        seen = np.zeros(self.num_classes, dtype=bool)
        for index, prototype in enumerate(self.prototypes):
            if prototype is not None:
                logits[index] = -float(np.sum((query - prototype) ** 2)) / temperature
                seen[index] = True

        scores = np.exp(logits - logits.max())
        probabilities = scores / scores.sum()
        epsilon = float(probabilities.max())

        predicted = None
        if seen.any():
            predicted = BoxClass(int(np.argmax(np.where(seen, logits, -np.inf))))
        return Prediction(predicted, epsilon, tuple(float(p) for p in probabilities))

    def learn(self, features: Sequence[float], true_label: BoxClass, ema_rate: float) -> None:
        sample = np.asarray(features, dtype=float)
        index = BoxClass(true_label).value
        prototype = self.prototypes[index]
        if prototype is None:
            self.prototypes[index] = sample.copy()
        else:
            self.prototypes[index] = (1.0 - ema_rate) * prototype + ema_rate * sample
        self.counts[index] += 1

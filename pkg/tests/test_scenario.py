import math

import pytest
from pydantic import ValidationError

from cais_resilience.contracts import BoxClass, Mode, Phase, ScenarioConfig
from cais_resilience.simulation import IncrementalClassifier, run_scenario
from cais_resilience.utils.timeline_utils import write_timeline


def _first_index(run, phase):
    return next(index for index, entry in enumerate(run.timeline) if entry.phase is phase)


def test_default_run_visits_all_six_phases(default_run):
    assert default_run.phase_sequence == list(Phase)


def test_default_run_first_episode(default_run):
    report = default_run.report
    assert _first_index(default_run, Phase.FIRST_STEADY) == 7
    assert report.steady_length == 34
    assert report.steady_length >= default_run.monitor_config.window_size
    assert report.acr_threshold == pytest.approx(0.2)
    assert _first_index(default_run, Phase.FIRST_DISRUPTIVE) == 41
    assert report.state_lengths["recovered"] > 0
    assert report.anomalies == []


def test_default_run_recovery_starts_after_last_below_point(default_run):
    start = _first_index(default_run, Phase.RECOVERED)
    threshold = default_run.report.acr_threshold
    assert default_run.timeline[start - 1].acr < threshold
    assert all(entry.acr >= threshold for entry in default_run.timeline[start:start + default_run.report.steady_length])


def test_default_run_degrades_again_after_fix(default_run):
    start = _first_index(default_run, Phase.SECOND_DISRUPTIVE)
    # first zero window after the fix: the five objects from fix_at are all handled by the human
    assert start == default_run.config.fix_at + default_run.config.window_size - 1
    assert all(event.contribution_bit == 0 for event in default_run.events[default_run.config.fix_at:start + 1])
    assert default_run.timeline[start].acr == 0.0
    assert default_run.report.recovered.second is True


def test_no_disruption_ends_in_first_steady():
    run = run_scenario(ScenarioConfig(disrupt_at=208, fix_at=208))
    assert run.phase_sequence == [Phase.INITIAL_LEARNING, Phase.FIRST_STEADY]
    assert run.report.span_length == 0
    assert run.report.hi_average is None


def test_noise_free_run_reaches_steady_quickly():
    config = ScenarioConfig(sensor_noise_sigma=0.0, num_iterations=40, disrupt_at=40, fix_at=40)
    run = run_scenario(config)
    assert _first_index(run, Phase.FIRST_STEADY) < 3 + config.window_size


def test_higher_k_never_shortens_initial_learning():
    entries = [_first_index(run_scenario(ScenarioConfig(k_threshold=k)), Phase.FIRST_STEADY) for k in (0.33, 0.40, 0.50)]
    assert entries == sorted(entries)


def test_same_seed_gives_identical_timeline():
    first = run_scenario(ScenarioConfig(seed=11))
    second = run_scenario(ScenarioConfig(seed=11))
    assert first.events == second.events
    assert write_timeline(first.timeline) == write_timeline(second.timeline)


def test_classes_are_balanced(default_run):
    classes = [event.true_class for event in default_run.events]
    for n in (1, 10, 69):
        prefix = classes[:3 * n]
        assert all(prefix.count(box) == n for box in BoxClass)


@pytest.mark.parametrize("seed", range(100))
def test_report_accounting_holds_for_any_seed(seed):
    run = run_scenario(ScenarioConfig(seed=seed))
    report = run.report
    window_size = run.monitor_config.window_size
    for entry in run.timeline:
        assert 0.0 <= entry.acr <= 1.0
        assert entry.acr * window_size == pytest.approx(round(entry.acr * window_size))

    steady = [entry.acr for entry in run.timeline if entry.phase is Phase.FIRST_STEADY]
    if steady:
        assert report.acr_threshold == min(steady)
    if Phase.FIRST_DISRUPTIVE in run.phase_sequence:
        assert report.acr_threshold == pytest.approx(1 / window_size)
        assert report.put + report.pat == report.span_length
        assert report.human_interventions <= report.span_length
    assert sum(report.state_lengths.values()) == len(run.timeline)


@pytest.mark.parametrize(
    "overrides",
    [
        {"disrupt_at": 300},
        {"fix_at": 20},
        {"fix_at": 300},
        {"lights_off_gain": 0.0},
        {"unknown": 1},
    ],
)
def test_invalid_scenario_is_rejected(overrides):
    with pytest.raises(ValidationError):
        ScenarioConfig(**overrides)


def test_without_self_training_the_restored_colours_are_relearned_quickly():
    run = run_scenario(ScenarioConfig(self_training=False))
    assert run.phase_sequence == [Phase.INITIAL_LEARNING, Phase.FIRST_STEADY, Phase.FIRST_DISRUPTIVE, Phase.RECOVERED]


@pytest.mark.parametrize("seed", range(20))
def test_every_seed_visits_all_six_phases(seed):
    run = run_scenario(ScenarioConfig(seed=seed))
    assert run.phase_sequence == list(Phase)
    assert run.report.anomalies == []


@pytest.mark.parametrize("seed", range(20))
def test_bit_is_one_only_for_confident_correct_predictions(seed):
    run = run_scenario(ScenarioConfig(seed=seed))
    k = run.config.k_threshold
    for event in run.events:
        confident_and_correct = event.predicted_class is event.true_class and event.epsilon >= k
        assert event.contribution_bit == (1 if confident_and_correct else 0)
        assert event.human_intervened == (event.mode is Mode.LEARNING)


@pytest.mark.parametrize("self_training", [True, False])
@pytest.mark.parametrize("seed", range(10))
def test_every_learn_call_uses_the_true_class(monkeypatch, seed, self_training):
    taught = []
    learn = IncrementalClassifier.learn

    def recording_learn(classifier, features, true_label, ema_rate):
        taught.append(true_label)
        learn(classifier, features, true_label, ema_rate)

    monkeypatch.setattr(IncrementalClassifier, "learn", recording_learn)
    run = run_scenario(ScenarioConfig(seed=seed, self_training=self_training))

    if self_training:
        assert taught == [event.true_class for event in run.events]
    else:
        assert taught == [event.true_class for event in run.events if event.human_intervened]


@pytest.mark.parametrize("seed", range(20))
def test_probabilities_are_normalised_over_a_run(seed):
    run = run_scenario(ScenarioConfig(seed=seed))
    assert len(run.predictions) == len(run.events)
    for prediction, event in zip(run.predictions, run.events):
        assert abs(math.fsum(prediction.probabilities) - 1.0) <= 1e-9
        assert prediction.epsilon == max(prediction.probabilities)
        assert event.epsilon == prediction.epsilon


@pytest.mark.parametrize("seed", range(20))
def test_phases_never_move_backwards(seed):
    ranks = [entry.phase.rank for entry in run_scenario(ScenarioConfig(seed=seed)).timeline]
    assert ranks == sorted(ranks)

import pandas as pd
import pytest

from mchairs.cli import (
    ChurnEvent,
    ChurnScenario,
    ScenarioRejected,
    WorstCaseStrategy,
    freq_demo,
    interference_bound,
    random_scenario,
)
from mchairs.cli.freq_demo import ARRIVE, DEPART, make_policy
from mchairs.engine import Configuration, SchedulerModel, legal_moves
from mchairs.verifier import max_run
from ..fakes import make_system


@pytest.fixture
def bound(s2_system):
    return interference_bound(s2_system, 2)


def test_interference_bound(s2_system, bound):
    assert bound == max_run(s2_system, SchedulerModel.IMMEDIATE)
    assert interference_bound(make_system('1', '2'), 1) == 0
    assert interference_bound(s2_system, 2, budget=10) is None


def test_interference_bound_rejects_losing_words():
    with pytest.raises(ScenarioRejected):
        interference_bound(make_system('12', '21', '123', m=3), 2)


@pytest.mark.parametrize('events,n', [
    ([(0, 0, ARRIVE), (0, 1, ARRIVE)], 1),
    ([(3, 0, DEPART)], 2),
    ([(0, 0, ARRIVE), (2, 0, ARRIVE)], 2),
    ([(0, 0, ARRIVE), (60, 0, DEPART)], 2),
    ([(0, 5, ARRIVE)], 2),
    ([(0, 0, 'visit')], 2),
    ([], 0),
])
def test_scenario_rejected(s2_system, events, n):
    with pytest.raises(ScenarioRejected):
        ChurnScenario(s2_system, n, events, 50)


def test_departures_before_arrivals(s2_system):
    scenario = ChurnScenario(s2_system, 1, [(5, 0, ARRIVE), (5, 1, DEPART), (0, 1, ARRIVE)], 10)

    assert scenario.events == [ChurnEvent(0, 1, ARRIVE), ChurnEvent(5, 1, DEPART), ChurnEvent(5, 0, ARRIVE)]
    assert scenario.event_times == [0, 5]


def test_random_scenario(s2_system):
    scenario = random_scenario(s2_system, 2, 500, 20, seed=3)

    times = scenario.event_times
    assert times[0] == 0
    assert all(b - a >= 20 for a, b in zip(times, times[1:]))
    assert times[-1] <= 500
    assert random_scenario(s2_system, 2, 500, 20, seed=3).events == scenario.events
    with pytest.raises(ValueError):
        random_scenario(s2_system, 2, 500, 0, seed=3)


def test_static_demo(s2_system, bound):
    scenario = ChurnScenario.static(s2_system, 2, bound + 5)

    report = freq_demo(scenario, seed=1, bound=bound)

    assert report.bound == bound
    assert len(report.long_quiet_intervals) == 1
    assert report.passed
    assert report.max_interference <= bound
    assert isinstance(report.log, pd.DataFrame)
    assert list(report.log.columns) == ['time', 'device', 'chair', 'hopped']
    assert 'Policy' in report.summary()


def test_single_device_never_hops(s2_system):
    scenario = ChurnScenario.static(s2_system, 1, 30, devices=[1])

    report = freq_demo(scenario, seed=0)

    assert report.bound == 0
    assert report.interference == {1: 0}
    assert report.log.empty
    assert report.passed


@pytest.mark.parametrize('policy', ['canonical', 'random', 'worst'])
def test_churn_demo_quiet_intervals_end_safe(s2_system, bound, policy):
    scenario = random_scenario(s2_system, 2, 8 * (bound + 1), bound + 1, seed=5)

    report = freq_demo(scenario, seed=5, policy=policy, bound=bound)

    assert report.long_quiet_intervals
    assert all(q.safe_at_end for q in report.long_quiet_intervals)
    assert report.passed


def test_make_policy():
    assert make_policy('canonical')[1] == SchedulerModel.CANONICAL
    assert make_policy('worst')[1] == SchedulerModel.IMMEDIATE
    with pytest.raises(ValueError):
        make_policy('greedy')


def test_worst_case_strategy_prefers_cycles():
    system = make_system('12', '21', m=2)
    configuration = Configuration.initial(system, [0, 1])

    moved = WorstCaseStrategy().choose(configuration, legal_moves(configuration, SchedulerModel.IMMEDIATE))

    assert moved == frozenset([0, 1])

import os

import numpy as np
import pytest

from mchairs.engine import SchedulerModel
from mchairs.utils import BudgetExceeded, BUDGET_ENV
from mchairs.verifier import ConfigurationGraph, estimate_transitions, moved_sets
from ..fakes import make_system


@pytest.fixture
def crossing():
    # State index is 2 * p1 + p2; (0, 1) and (1, 0) conflict and lead into each other.
    return ConfigurationGraph(make_system('12', '21', m=2), SchedulerModel.CANONICAL)


@pytest.mark.parametrize('model,count', [
    (SchedulerModel.IMMEDIATE, 7),
    (SchedulerModel.PAIRWISE, 6),
    (SchedulerModel.CANONICAL, 6),
])
def test_moved_sets(model, count):
    assert len(moved_sets(3, model)) == count


def test_estimate_transitions():
    assert estimate_transitions([2, 3], SchedulerModel.IMMEDIATE) == 18
    assert estimate_transitions([2, 3, 4], SchedulerModel.PAIRWISE) == 144
    assert estimate_transitions([2, 3, 4], SchedulerModel.CANONICAL) == 72


def test_budget_exceeded(s2_system):
    with pytest.raises(BudgetExceeded) as e:
        ConfigurationGraph(s2_system, SchedulerModel.IMMEDIATE, budget=100)

    assert e.value.estimate == 48 * 49 * 3
    assert e.value.budget == 100


def test_budget_from_environment(mocker, s2_system):
    mocker.patch.dict(os.environ, {BUDGET_ENV: '10'})

    with pytest.raises(BudgetExceeded):
        ConfigurationGraph(s2_system, SchedulerModel.CANONICAL)


def test_index_round_trip():
    graph = ConfigurationGraph(make_system('123', '12', '1234', m=4), SchedulerModel.PAIRWISE)

    for index in range(graph.num_states):
        assert graph.index_of(graph.positions_of(index)) == index
    assert graph.num_states == 24


def test_unsafe_and_heights(crossing):
    np.testing.assert_array_equal(crossing.unsafe, [False, True, True, False])
    np.testing.assert_array_equal(crossing.heights(), [0, -1, -1, 0])
    assert not crossing.is_acyclic


def test_forward_is_csr_of_numpy_arrays(crossing):
    pointers, targets, move_ids = crossing.forward()

    assert all(isinstance(a, np.ndarray) for a in (pointers, targets, move_ids))
    np.testing.assert_array_equal(pointers, [0, 0, 3, 6, 6])
    assert sorted(targets[0:3].tolist()) == [0, 2, 3]
    assert sorted(targets[3:6].tolist()) == [0, 1, 3]
    assert sorted(move_ids[0:3].tolist()) == [0, 1, 2]


def test_find_cycle(crossing):
    cycle = crossing.find_cycle()

    assert [state for state, _ in cycle] == [1, 2]
    assert all(crossing.moved_sets[k] == frozenset([0, 1]) for _, k in cycle)


def test_trace_of_cycle_returns_to_start(crossing):
    cycle = crossing.find_cycle()

    trace = crossing.trace_of(cycle[0][0], cycle)

    assert len(trace) == 2
    assert trace.final.positions == trace.initial.positions


def test_acyclic_heights():
    # Chairs of '123' and '213' meet on one chair at a time and split after any move.
    graph = ConfigurationGraph(make_system('123', '213', m=3), SchedulerModel.IMMEDIATE)

    assert graph.is_acyclic
    assert graph.max_run() == 1
    assert graph.find_cycle() is None
    assert int(graph.unsafe.sum()) == 3


def test_player_progress():
    graph = ConfigurationGraph(make_system('123', '213', m=3), SchedulerModel.IMMEDIATE)

    best = graph.player_progress()

    assert best.shape == (2, 9)
    assert best.max() == 1
    assert best[0][graph.index_of((1, 0))] == 1
    assert best[0][graph.index_of((0, 0))] == 0

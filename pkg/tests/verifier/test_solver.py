import itertools

import numpy as np
import pytest

from mchairs.engine import SchedulerModel, replay
from mchairs.verifier import Cyclic, Verdict, Winner, decide, duplicate_witness, is_terminal, max_run
from mchairs.words import Word, WordSystem, is_full
from ..fakes import make_system


def test_duplicate_words_lose_without_search():
    system = make_system('12', '12', m=2)

    verdict = decide(system)

    assert verdict.winner == Winner.SCHEDULER
    assert verdict.states == 0
    assert len(verdict.cycle) == 2
    assert verdict.cycle.final.positions == verdict.cycle.initial.positions


def test_duplicate_witness_respects_canonical_order():
    # The copies of '21' start on chair 2, then meet the first player on chair 1.
    system = make_system('12', '21', '21', m=2)

    assert duplicate_witness(system, SchedulerModel.CANONICAL) is None
    witness = duplicate_witness(system, SchedulerModel.IMMEDIATE)
    assert witness is not None
    assert replay(witness)
    assert decide(system, SchedulerModel.CANONICAL).winner == Winner.SCHEDULER


def test_duplicate_witness_none_for_distinct_words():
    assert duplicate_witness(make_system('12', '21', m=2)) is None


@pytest.mark.parametrize('model', list(SchedulerModel))
def test_two_chairs_two_players_lose(model):
    verdict = decide(make_system('12', '21', m=2), model)

    assert verdict.winner == Winner.SCHEDULER
    assert replay(verdict.cycle)
    assert verdict.cycle.final.positions == verdict.cycle.initial.positions


def test_fixed_starts():
    system = make_system('12', '21', m=2)

    safe = decide(system, starts=[0, 0])
    losing = decide(system, starts=[0, 1])

    assert safe.winner == Winner.TEAM
    assert safe.max_run == 0
    assert losing.winner == Winner.SCHEDULER
    assert losing.prefix is not None and len(losing.prefix) == 0
    assert losing.cycle.initial.positions == (0, 1)


def test_fixed_starts_count_checked():
    with pytest.raises(ValueError):
        decide(make_system('12', '21', m=2), starts=[0])


def test_team_winning_construction(s2_system):
    verdicts = [decide(s2_system, model) for model in SchedulerModel]

    assert all(v.winner == Winner.TEAM for v in verdicts)
    assert len({v.max_run for v in verdicts}) == 1
    assert verdicts[0].states == 48 * 49
    assert max_run(s2_system) == verdicts[0].max_run


def test_max_run_raises_on_scheduler_win():
    with pytest.raises(Cyclic):
        max_run(make_system('12', '21', m=2))


def test_word_indices():
    system = make_system('12', '12', '123', m=3)

    verdict = decide(system, word_indices=[0, 2])

    assert verdict.word_indices == (0, 2)


def test_verdict_file(tmp_path):
    system = make_system('12', '21', m=2)
    verdict = decide(system, SchedulerModel.PAIRWISE, starts=[0, 1])
    path = str(tmp_path / 'verdict.json')

    verdict.save(path)
    loaded = Verdict.load(path, system)

    assert loaded == verdict


@pytest.mark.parametrize('model', list(SchedulerModel))
def test_construction_is_terminal(s2_system, model):
    report = is_terminal(s2_system, model)

    assert report.terminal
    assert report.witness is None


def test_cyclic_collection_is_not_terminal():
    report = is_terminal(make_system('12', '21', m=2))

    assert not report.terminal
    assert report.player == 0
    assert replay(report.witness)


def test_separate_chairs_are_terminal():
    assert is_terminal(make_system('1', '2', m=2)).terminal


def _full_words(m, max_length):
    for length in range(m, max_length + 1):
        for letters in itertools.product(range(1, m + 1), repeat=length):
            if is_full(letters, m):
                yield Word(letters)


@pytest.mark.slow
def test_two_players_lose_on_two_chairs():
    words = list(_full_words(2, 6))

    for a, b in itertools.combinations_with_replacement(words, 2):
        verdict = decide(WordSystem(2, (a, b)), SchedulerModel.CANONICAL)
        assert verdict.winner == Winner.SCHEDULER, (a, b)


@pytest.mark.slow
def test_models_agree_on_random_systems():
    rng = np.random.default_rng(11)

    for _ in range(1000):
        n = int(rng.integers(2, 4))
        m = int(rng.integers(2, 6))
        words = [Word(tuple(rng.integers(1, m + 1, size=int(rng.integers(1, 7))).tolist())) for _ in range(n)]
        system = WordSystem(m, tuple(words))
        winners = {decide(system, model).winner for model in SchedulerModel}
        assert len(winners) == 1, system

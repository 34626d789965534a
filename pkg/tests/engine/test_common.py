import pytest

from mchairs.engine import Configuration, PlayerState, SchedulerModel, Trace
from mchairs.words import EmptyWordError, Word, WordSystem
from ..fakes import make_system


@pytest.mark.parametrize('text,model', [
    ('immediate', SchedulerModel.IMMEDIATE),
    ('Pairwise', SchedulerModel.PAIRWISE),
    ('pairwise_immediate', SchedulerModel.PAIRWISE),
    (' CANONICAL ', SchedulerModel.CANONICAL),
])
def test_model_from_string(text, model):
    assert SchedulerModel.from_string(text) == model


def test_model_from_string_unknown():
    with pytest.raises(ValueError):
        SchedulerModel.from_string('bogus')


def test_model_str():
    assert str(SchedulerModel.CANONICAL) == 'CANONICAL'


def test_configuration_positions_wrap():
    system = make_system('123', '132', m=3)
    c = Configuration(system, (PlayerState(0, 2, 2), PlayerState(1, 0, 0)))

    assert c.positions == (1, 0)
    assert c.chairs == (2, 1)
    assert c.word_indices == (0, 1)
    assert c.starts == (2, 0)


def test_configuration_initial_defaults_to_zero_starts():
    system = make_system('12', '21', m=2)

    c = Configuration.initial(system)

    assert c.players == (PlayerState(0, 0, 0), PlayerState(1, 0, 0))


def test_configuration_initial_checks_starts():
    system = make_system('12', '21', m=2)

    with pytest.raises(ValueError):
        Configuration.initial(system, starts=[0])


def test_configuration_rejects_empty_word():
    system = WordSystem(2, (Word((1, 2)), Word(())))

    with pytest.raises(EmptyWordError):
        Configuration.initial(system)


def test_configuration_equality_and_hash():
    system = make_system('12', '21', m=2)
    a = Configuration.initial(system).advance(frozenset([0]))
    b = Configuration(system, ((0, 0, 1), (1, 0, 0)))

    assert a == b
    assert hash(a) == hash(b)
    assert a != Configuration.initial(system)


def test_trace_accessors():
    system = make_system('12', '21', m=2)
    initial = Configuration.initial(system)
    trace = Trace(initial, SchedulerModel.IMMEDIATE)

    assert trace.final == initial
    trace.append({1}, initial.advance(frozenset([1])))

    assert len(trace) == 1
    assert trace.final.positions == (0, 1)
    assert trace.configurations == [initial, trace.final]

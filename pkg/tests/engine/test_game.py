import pytest
from hypothesis import given, strategies as st

from mchairs.engine import (
    Configuration,
    IllegalMove,
    NoConflict,
    SchedulerModel,
    Trace,
    apply_move,
    canonical_pair,
    conflict_pairs,
    conflicted,
    is_legal,
    is_safe,
    legal_moves,
    potential,
    replay,
    successors,
)
from ..fakes import make_system


@pytest.fixture
def three_players():
    # Chairs (1, 1, 2) from the first letters.
    return Configuration.initial(make_system('123', '132', '213', m=3))


@pytest.fixture
def crowded():
    return Configuration.initial(make_system('1', '1', '1', m=1))


def test_conflicts(three_players):
    assert conflicted(three_players) == frozenset([0, 1])
    assert conflict_pairs(three_players) == [(0, 1)]
    assert canonical_pair(three_players) == (0, 1)
    assert not is_safe(three_players)


def test_safe_configuration_has_no_canonical_pair():
    c = Configuration.initial(make_system('12', '21', m=2))

    assert is_safe(c)
    assert legal_moves(c, SchedulerModel.IMMEDIATE) == []
    with pytest.raises(NoConflict):
        canonical_pair(c)


@pytest.mark.parametrize('model', list(SchedulerModel))
def test_pair_moves(three_players, model):
    assert legal_moves(three_players, model) == [frozenset([0]), frozenset([1]), frozenset([0, 1])]


@pytest.mark.parametrize('model,count', [
    (SchedulerModel.IMMEDIATE, 7),
    (SchedulerModel.PAIRWISE, 6),
    (SchedulerModel.CANONICAL, 3),
])
def test_move_counts(crowded, model, count):
    moves = legal_moves(crowded, model)

    assert len(moves) == count
    assert len(set(moves)) == count
    assert len(successors(crowded, model)) == count


def test_pairwise_excludes_triples(crowded):
    assert not is_legal(crowded, {0, 1, 2}, SchedulerModel.PAIRWISE)
    assert is_legal(crowded, {0, 1, 2}, SchedulerModel.IMMEDIATE)
    assert not is_legal(crowded, {1, 2}, SchedulerModel.CANONICAL)
    assert not is_legal(crowded, set(), SchedulerModel.IMMEDIATE)


def test_apply_move(three_players):
    c = apply_move(three_players, {0, 1})

    assert c.chairs == (2, 3, 2)


def test_apply_move_rejects_safe_player(three_players):
    with pytest.raises(IllegalMove):
        apply_move(three_players, {2})


def test_potential(three_players):
    assert potential(three_players, 2.5) == pytest.approx(2.5)
    assert potential(Configuration.empty(three_players.system), 2.5) == 0


def test_replay():
    system = make_system('12', '12', m=2)
    initial = Configuration.initial(system)
    trace = Trace(initial, SchedulerModel.CANONICAL)
    trace.append({0, 1}, initial.advance(frozenset([0, 1])))

    assert replay(trace)


def test_replay_rejects_wrong_configuration():
    system = make_system('12', '12', m=2)
    initial = Configuration.initial(system)
    trace = Trace(initial, SchedulerModel.CANONICAL)
    trace.append({0, 1}, initial.advance(frozenset([0])))

    with pytest.raises(IllegalMove, match='Step 1'):
        replay(trace)


def test_replay_rejects_illegal_move_under_stricter_model(crowded):
    trace = Trace(crowded, SchedulerModel.IMMEDIATE)
    trace.append({0, 1, 2}, crowded.advance(frozenset([0, 1, 2])))

    assert replay(trace)
    with pytest.raises(IllegalMove):
        replay(trace, SchedulerModel.PAIRWISE)


@st.composite
def configurations(draw):
    m = draw(st.integers(min_value=1, max_value=4))
    letters = st.lists(st.integers(min_value=1, max_value=m), min_size=1, max_size=5)
    words = draw(st.lists(letters, min_size=2, max_size=4))
    starts = [draw(st.integers(min_value=0, max_value=len(w) - 1)) for w in words]
    system = make_system(*(''.join(map(str, w)) for w in words), m=m)
    return Configuration.initial(system, starts)


@given(configurations())
def test_successor_sets_are_nested(c):
    canonical = {moved for moved, _ in successors(c, SchedulerModel.CANONICAL)}
    pairwise = {moved for moved, _ in successors(c, SchedulerModel.PAIRWISE)}
    immediate = {moved for moved, _ in successors(c, SchedulerModel.IMMEDIATE)}

    assert canonical <= pairwise <= immediate
    assert bool(immediate) == (not is_safe(c))


@given(configurations())
def test_successor_moves_exactly_the_moved_players(c):
    for moved, after in successors(c, SchedulerModel.IMMEDIATE):
        assert after.word_indices == c.word_indices
        assert after.starts == c.starts
        for i, (before_player, after_player) in enumerate(zip(c.players, after.players)):
            assert after_player.moves == before_player.moves + (1 if i in moved else 0)

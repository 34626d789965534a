"""Rules of the game: conflicts, legal scheduler moves and the potential."""

import collections
import itertools
from typing import Dict, FrozenSet, List, Tuple

from mchairs.words import WordSystem
from .common import (
    Configuration,
    IllegalMove,
    NoConflict,
    PlayerState,
    SchedulerModel,
    Trace,
)

Successor = Tuple[FrozenSet[int], Configuration]


def chair_of(p: PlayerState, system: WordSystem) -> int:
    return system[p.word_index].at(p.start + p.moves)


def _chair_groups(c: Configuration) -> Dict[int, List[int]]:
    groups = collections.defaultdict(list)
    for i, chair in enumerate(c.chairs):
        groups[chair].append(i)
    return groups


def conflicted(c: Configuration) -> FrozenSet[int]:
    """Players that share their chair with some other player."""
    res = set()
    for players in _chair_groups(c).values():
        if len(players) > 1:
            res.update(players)
    return frozenset(res)


def is_safe(c: Configuration) -> bool:
    return not conflicted(c)


def conflict_pairs(c: Configuration) -> List[Tuple[int, int]]:
    """All pairs i < j sitting on one chair, in lexicographic order."""
    chairs = c.chairs
    return [(i, j) for i, j in itertools.combinations(range(len(chairs)), 2)
            if chairs[i] == chairs[j]]


def canonical_pair(c: Configuration) -> Tuple[int, int]:
    chairs = c.chairs
    for i, j in itertools.combinations(range(len(chairs)), 2):
        if chairs[i] == chairs[j]:
            return i, j
    raise NoConflict('Safe configuration has no canonical pair')


def legal_moves(c: Configuration, model: SchedulerModel) -> List[FrozenSet[int]]:
    """Moved sets the scheduler may pick, in a deterministic order."""
    if model == SchedulerModel.IMMEDIATE:
        players = sorted(conflicted(c))
        return [frozenset(subset)
                for size in range(1, len(players) + 1)
                for subset in itertools.combinations(players, size)]
    if model == SchedulerModel.PAIRWISE:
        pairs = conflict_pairs(c)
    else:
        pairs = [canonical_pair(c)] if not is_safe(c) else []
    moves = []
    for i, j in pairs:
        for moved in (frozenset([i]), frozenset([j]), frozenset([i, j])):
            if moved not in moves:
                moves.append(moved)
    return moves


def is_legal(c: Configuration, moved, model: SchedulerModel) -> bool:
    moved = frozenset(moved)
    if not moved:
        return False
    if model == SchedulerModel.IMMEDIATE:
        return moved <= conflicted(c)
    return moved in legal_moves(c, model)


def apply_move(c: Configuration, moved, model: SchedulerModel = SchedulerModel.IMMEDIATE) -> Configuration:
    moved = frozenset(moved)
    if not is_legal(c, moved, model):
        ids = sorted(i + 1 for i in moved)
        raise IllegalMove(f'Moving players {ids} is not legal under {model} at {c!r}')
    return c.advance(moved)


def successors(c: Configuration, model: SchedulerModel) -> List[Successor]:
    return [(moved, c.advance(moved)) for moved in legal_moves(c, model)]


def potential(c: Configuration, x: float) -> float:
    """x to the number of players minus the number of occupied chairs; 0 when nobody plays."""
    if not c.players:
        return 0.0
    return float(x) ** (c.n - len(set(c.chairs)))


def replay(trace: Trace, model=None) -> bool:
    """Checks every step of the trace against the rules. Raises IllegalMove on the first violation."""
    model = model or trace.model
    current = trace.initial
    for k, step in enumerate(trace.steps):
        if not is_legal(current, step.moved, model):
            ids = sorted(i + 1 for i in step.moved)
            raise IllegalMove(f'Step {k + 1}: moving players {ids} is not legal under {model}')
        current = current.advance(step.moved)
        if current != step.configuration:
            raise IllegalMove(f'Step {k + 1}: recorded configuration does not follow from the move')
    return True

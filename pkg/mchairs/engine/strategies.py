import abc
import itertools
from typing import Callable, FrozenSet, Iterable, List, Optional, Sequence, Union

import numpy as np

from .common import Configuration, IllegalMove
from .game import canonical_pair, conflicted


class StopSimulation(Exception):
    """Raised by a strategy to end the run early."""


class Strategy(abc.ABC):
    """Scheduler policy: picks one of the legal moved sets at an unsafe configuration."""

    @property
    def name(self) -> str:
        strategy_name = type(self).__name__
        suffix = 'Strategy'
        assert strategy_name.endswith(suffix)
        return strategy_name[:-len(suffix)]

    @abc.abstractmethod
    def choose(self, configuration: Configuration, moves: List[FrozenSet[int]]) -> FrozenSet[int]:
        raise NotImplementedError('Calling parent interface')


class RandomStrategy(Strategy):

    def __init__(self, seed: Optional[int] = None) -> None:
        self._rng = np.random.default_rng(seed)

    def choose(self, configuration: Configuration, moves: List[FrozenSet[int]]) -> FrozenSet[int]:
        return moves[int(self._rng.integers(len(moves)))]


def _relative_move(configuration: Configuration, how: str) -> FrozenSet[int]:
    i, j = canonical_pair(configuration)
    if how == 'first':
        return frozenset([i])
    if how == 'second':
        return frozenset([j])
    if how == 'both':
        return frozenset([i, j])
    raise ValueError(f'Unknown move {how!r}')


class CanonicalFirstStrategy(Strategy):
    """Moves the canonical pair: both players by default, or only the first or second."""

    def __init__(self, how: str = 'both') -> None:
        if how not in ('first', 'second', 'both'):
            raise ValueError(f'Unknown move {how!r}')
        self._how = how

    def choose(self, configuration: Configuration, moves: List[FrozenSet[int]]) -> FrozenSet[int]:
        moved = _relative_move(configuration, self._how)
        return moved if moved in moves else moves[0]


def parse_move(token: str, configuration: Configuration) -> FrozenSet[int]:
    """Reads 'first', 'second', 'both' (relative to the canonical pair) or 1-based ids like '1,3'."""
    token = token.strip().lower()
    if token in ('first', 'second', 'both'):
        return _relative_move(configuration, token)
    try:
        ids = [int(s) for s in token.replace('{', '').replace('}', '').split(',') if s.strip()]
    except ValueError:
        raise IllegalMove(f'Cannot read move {token!r}') from None
    return frozenset(i - 1 for i in ids)


class ScriptedStrategy(Strategy):
    """Replays a fixed list of moves, cycling through it when ``repeat`` is set."""

    def __init__(self, script: Sequence[Union[str, Iterable[int]]], repeat: bool = True) -> None:
        if not script:
            raise ValueError('Empty script')
        self._script = list(script)
        self._iterator = itertools.cycle(self._script) if repeat else iter(self._script)

    def choose(self, configuration: Configuration, moves: List[FrozenSet[int]]) -> FrozenSet[int]:
        try:
            entry = next(self._iterator)
        except StopIteration:
            raise StopSimulation('Script exhausted') from None
        if isinstance(entry, str):
            moved = parse_move(entry, configuration)
        else:
            moved = frozenset(entry)
        if moved not in moves:
            raise IllegalMove(f'Scripted move {sorted(i + 1 for i in moved)} is not legal')
        return moved


class InteractiveStrategy(Strategy):
    """Terminal loop: shows the conflicts and reads the moved set from the user."""

    def __init__(self,
                 input_func: Callable[[str], str] = input,
                 output_func: Callable[[str], None] = print) -> None:
        self._input = input_func
        self._output = output_func

    def choose(self, configuration: Configuration, moves: List[FrozenSet[int]]) -> FrozenSet[int]:
        chairs = configuration.chairs
        players = sorted(conflicted(configuration))
        self._output('Conflicted: ' + ', '.join(f'P{i + 1}@{chairs[i]}' for i in players))
        for k, moved in enumerate(moves):
            self._output(f'  [#{k}] move {{{",".join(str(i + 1) for i in sorted(moved))}}}')
        while True:
            answer = self._input('choice (#index, ids like 1,2, first/second/both, q to quit)> ').strip()
            if answer.lower() in ('q', 'quit', 'exit'):
                raise StopSimulation('Stopped by user')
            if answer.startswith('#'):
                index = answer[1:].strip()
                if index.isdecimal() and int(index) < len(moves):
                    return moves[int(index)]
                self._output(f'No move {answer}.')
                continue
            try:
                moved = parse_move(answer, configuration)
            except IllegalMove as e:
                self._output(str(e))
                continue
            if moved in moves:
                return moved
            self._output('Not a legal move.')

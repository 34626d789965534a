import collections
from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, List, Optional, Sequence, Tuple

from mchairs.utils import MchairsError
from mchairs.words import EmptyWordError, WordSystem


class NoConflict(MchairsError):
    """Configuration is safe."""


class IllegalMove(MchairsError):
    """Moved set is not legal for the scheduler model."""


class SchedulerModel(Enum):
    IMMEDIATE = 1
    PAIRWISE = 2
    CANONICAL = 3

    def __str__(self):
        return self.name

    @classmethod
    def from_string(cls, value: str) -> 'SchedulerModel':
        value = value.strip().upper()
        if value in ('PAIRWISE_IMMEDIATE', 'PAIRWISEIMMEDIATE'):
            value = 'PAIRWISE'
        try:
            return cls[value]
        except KeyError:
            raise ValueError(f'Unknown scheduler model {value!r}') from None


PlayerState = collections.namedtuple('PlayerState', ['word_index', 'start', 'moves'])
Step = collections.namedtuple('Step', ['moved', 'configuration'])


@dataclass(frozen=True, eq=False)
class Configuration:
    """Traversal state of n players, each on a word of one system.

    Player i sits on ``word[(start + moves) % len(word)]``.
    """
    system: WordSystem
    players: Tuple[PlayerState, ...]

    def __post_init__(self):
        players = tuple(PlayerState(*p) for p in self.players)
        for p in players:
            if not 0 <= p.word_index < len(self.system):
                raise IndexError(f'Word index {p.word_index} outside of system')
            if self.system[p.word_index].is_empty:
                raise EmptyWordError(f'Word {p.word_index + 1} is empty')
            if p.moves < 0:
                raise ValueError('Move count must be nonnegative')
        object.__setattr__(self, 'players', players)

    @classmethod
    def initial(cls,
                system: WordSystem,
                starts: Optional[Sequence[int]] = None,
                word_indices: Optional[Sequence[int]] = None) -> 'Configuration':
        if word_indices is None:
            word_indices = range(len(system))
        word_indices = list(word_indices)
        if starts is None:
            starts = [0] * len(word_indices)
        if len(starts) != len(word_indices):
            raise ValueError(f'Expected {len(word_indices)} starts, got {len(starts)}')
        return cls(system, tuple(PlayerState(w, int(s), 0) for w, s in zip(word_indices, starts)))

    @classmethod
    def empty(cls, system: WordSystem) -> 'Configuration':
        return cls(system, ())

    @property
    def n(self) -> int:
        return len(self.players)

    @property
    def positions(self) -> Tuple[int, ...]:
        return tuple((p.start + p.moves) % len(self.system[p.word_index]) for p in self.players)

    @property
    def chairs(self) -> Tuple[int, ...]:
        return tuple(self.system[p.word_index].at(p.start + p.moves) for p in self.players)

    @property
    def word_indices(self) -> Tuple[int, ...]:
        return tuple(p.word_index for p in self.players)

    @property
    def starts(self) -> Tuple[int, ...]:
        return tuple(p.start for p in self.players)

    def advance(self, moved: FrozenSet[int]) -> 'Configuration':
        players = tuple(PlayerState(p.word_index, p.start, p.moves + 1) if i in moved else p
                        for i, p in enumerate(self.players))
        return Configuration(self.system, players)

    def __eq__(self, other):
        if not isinstance(other, Configuration):
            return NotImplemented
        return self.players == other.players and (
                self.system is other.system or self.system == other.system)

    def __hash__(self):
        return hash(self.players)

    def __repr__(self):
        return f'Configuration(positions={self.positions}, chairs={self.chairs})'


@dataclass
class Trace:
    """A schedule: the initial configuration and every (moved set, result) step."""
    initial: Configuration
    model: SchedulerModel
    steps: List[Step] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def final(self) -> Configuration:
        return self.steps[-1].configuration if self.steps else self.initial

    @property
    def configurations(self) -> List[Configuration]:
        return [self.initial] + [step.configuration for step in self.steps]

    def append(self, moved, configuration: Configuration) -> None:
        self.steps.append(Step(frozenset(moved), configuration))

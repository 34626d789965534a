import json
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from mchairs.engine import Configuration, PlayerState, SchedulerModel, Trace
from mchairs.utils import MchairsError
from mchairs.words import WordSystem


class Cyclic(MchairsError):
    """Configuration graph has a cycle."""


class Winner(Enum):
    TEAM = 1
    SCHEDULER = 2

    def __str__(self):
        return self.name


def _trace_to_dict(trace: Optional[Trace]) -> Optional[Dict[str, Any]]:
    if trace is None:
        return None
    return {
        'words': [i + 1 for i in trace.initial.word_indices],
        'starts': list(trace.initial.starts),
        'moves': [p.moves for p in trace.initial.players],
        'steps': [{'moved': sorted(i + 1 for i in step.moved),
                   'positions': list(step.configuration.positions),
                   'chairs': list(step.configuration.chairs)}
                  for step in trace.steps],
    }


def _trace_from_dict(data: Optional[Dict[str, Any]], system: WordSystem,
                     model: SchedulerModel) -> Optional[Trace]:
    if data is None:
        return None
    moves = data['moves']
    configuration = Configuration(system, tuple(
        PlayerState(w - 1, s, k) for w, s, k in zip(data['words'], data['starts'], moves)))
    trace = Trace(configuration, model)
    for step in data['steps']:
        configuration = configuration.advance(frozenset(i - 1 for i in step['moved']))
        trace.append(frozenset(i - 1 for i in step['moved']), configuration)
    return trace


@dataclass
class Verdict:
    """Winner of a team, with a longest run for the team or a reachable cycle for the scheduler."""
    winner: Winner
    model: SchedulerModel
    word_indices: Tuple[int, ...]
    starts: Optional[Tuple[int, ...]] = None
    max_run: Optional[int] = None
    longest_from: Optional[Tuple[int, ...]] = None
    cycle: Optional[Trace] = None
    prefix: Optional[Trace] = None
    states: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'winner': str(self.winner),
            'model': str(self.model),
            'words': [i + 1 for i in self.word_indices],
            'starts': list(self.starts) if self.starts is not None else 'all',
            'max_run': self.max_run,
            'longest_from': list(self.longest_from) if self.longest_from is not None else None,
            'cycle': _trace_to_dict(self.cycle),
            'prefix': _trace_to_dict(self.prefix),
            'states': self.states,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], system: WordSystem) -> 'Verdict':
        model = SchedulerModel.from_string(data['model'])
        starts = data['starts']
        longest_from = data.get('longest_from')
        return cls(winner=Winner[data['winner']],
                   model=model,
                   word_indices=tuple(i - 1 for i in data['words']),
                   starts=None if starts == 'all' else tuple(starts),
                   max_run=data.get('max_run'),
                   longest_from=tuple(longest_from) if longest_from is not None else None,
                   cycle=_trace_from_dict(data.get('cycle'), system, model),
                   prefix=_trace_from_dict(data.get('prefix'), system, model),
                   states=data.get('states', 0))

    def save(self, path: str) -> None:
        with open(path, 'w') as f:
            json.dump(self.to_dict(), f, indent=2)
            f.write('\n')

    @classmethod
    def load(cls, path: str, system: WordSystem) -> 'Verdict':
        with open(path, 'r') as f:
            return cls.from_dict(json.load(f), system)


@dataclass
class TerminalityReport:
    """Whether no schedule fully traverses a word; otherwise a schedule that does."""
    terminal: bool
    model: SchedulerModel
    witness: Optional[Trace] = None
    player: Optional[int] = None
    states: int = 0

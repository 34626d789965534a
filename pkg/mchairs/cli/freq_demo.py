"""Frequency hopping with device churn.

Devices are players, frequencies are chairs. A device hops along its word whenever the
scheduler notifies it of interference. Arrivals and departures happen at integer times;
the scheduler acts once per time unit, half a unit later.
"""

import collections
import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import cachetools
import numpy as np
import pandas as pd
import simpy
import tabulate

from mchairs.engine import (
    CanonicalFirstStrategy,
    Configuration,
    PlayerState,
    RandomStrategy,
    SchedulerModel,
    Strategy,
    conflicted,
    is_safe,
    legal_moves,
)
from mchairs.utils import BudgetExceeded, MchairsError, get_header, logging_config
from mchairs.verifier import ConfigurationGraph, verify_every_n
from mchairs.words import WordSystem

ARRIVE = 'arrive'
DEPART = 'depart'
POLICIES = ('canonical', 'random', 'worst')

ChurnEvent = collections.namedtuple('ChurnEvent', ['time', 'device', 'kind'])
QuietInterval = collections.namedtuple('QuietInterval', ['start', 'end', 'safe_at_end'])

_heights_cache = cachetools.LRUCache(maxsize=32)


class ScenarioRejected(MchairsError):
    """Scenario breaks the capacity or the arrival and departure order."""


@dataclass
class ChurnScenario:
    system: WordSystem
    n: int
    events: List[ChurnEvent]
    horizon: int

    def __post_init__(self):
        self.events = sorted((ChurnEvent(*e) for e in self.events), key=lambda e: (e.time, e.kind != DEPART))
        if self.n < 1:
            raise ScenarioRejected(f'Capacity must be positive, got {self.n}')
        resident = set()
        for e in self.events:
            if not 0 <= e.device < len(self.system):
                raise ScenarioRejected(f'Device {e.device + 1} has no word')
            if not 0 <= e.time <= self.horizon:
                raise ScenarioRejected(f'Event at {e.time} outside of [0, {self.horizon}]')
            if e.kind == ARRIVE:
                if e.device in resident:
                    raise ScenarioRejected(f'Device {e.device + 1} arrives twice at {e.time}')
                resident.add(e.device)
                if len(resident) > self.n:
                    raise ScenarioRejected(f'{len(resident)} devices resident at {e.time}, capacity is {self.n}')
            elif e.kind == DEPART:
                if e.device not in resident:
                    raise ScenarioRejected(f'Device {e.device + 1} departs at {e.time} without being resident')
                resident.remove(e.device)
            else:
                raise ScenarioRejected(f'Unknown event kind {e.kind!r}')

    @classmethod
    def static(cls, system: WordSystem, n: int, horizon: int,
               devices: Optional[Sequence[int]] = None) -> 'ChurnScenario':
        devices = range(len(system)) if devices is None else devices
        return cls(system, n, [ChurnEvent(0, d, ARRIVE) for d in devices], horizon)

    @property
    def event_times(self) -> List[int]:
        return sorted({e.time for e in self.events})


def random_scenario(system: WordSystem, n: int, horizon: int, quiet: int, seed: int) -> ChurnScenario:
    """Churn where consecutive events are at least ``quiet`` time units apart."""
    if quiet < 1:
        raise ValueError(f'Quiet length must be positive, got {quiet}')
    rng = np.random.default_rng(seed)
    devices = list(range(len(system)))
    first = rng.choice(devices, size=int(rng.integers(1, min(n, len(devices)) + 1)), replace=False)
    resident = set(int(d) for d in first)
    events = [ChurnEvent(0, d, ARRIVE) for d in sorted(resident)]
    time = quiet + int(rng.integers(quiet + 1))
    while time <= horizon:
        absent = [d for d in devices if d not in resident]
        leave = bool(resident) and (len(resident) == n or not absent or rng.random() < 0.5)
        if leave:
            device = int(rng.choice(sorted(resident)))
            resident.remove(device)
            events.append(ChurnEvent(time, device, DEPART))
        if absent and len(resident) < n and (not leave or rng.random() < 0.5):
            device = int(rng.choice(absent))
            resident.add(device)
            events.append(ChurnEvent(time, device, ARRIVE))
        time += quiet + int(rng.integers(quiet + 1))
    return ChurnScenario(system, n, events, horizon)


def _team_heights(system: WordSystem, word_indices: Tuple[int, ...], budget: Optional[int]) -> Tuple[ConfigurationGraph, np.ndarray]:
    key = (system, word_indices)
    if key not in _heights_cache:
        graph = ConfigurationGraph(system, SchedulerModel.IMMEDIATE, word_indices, budget)
        _heights_cache[key] = graph, graph.heights()
    return _heights_cache[key]


class WorstCaseStrategy(Strategy):
    """Picks a move whose result has the longest remaining schedule, cycles first."""

    def __init__(self, budget: Optional[int] = None) -> None:
        self._budget = budget

    def choose(self, configuration: Configuration, moves):
        graph, heights = _team_heights(configuration.system, configuration.word_indices, self._budget)
        best, best_height = moves[0], -np.inf
        for moved in moves:
            h = heights[graph.index_of(configuration.advance(moved).positions)]
            h = np.inf if h < 0 else h
            if h > best_height:
                best, best_height = moved, h
        return best


def make_policy(policy: str, seed: Optional[int] = None, budget: Optional[int] = None):
    """Strategy and the scheduler model its moves are drawn from."""
    if policy == 'canonical':
        return CanonicalFirstStrategy('both'), SchedulerModel.CANONICAL
    if policy == 'random':
        return RandomStrategy(seed), SchedulerModel.IMMEDIATE
    if policy == 'worst':
        return WorstCaseStrategy(budget), SchedulerModel.IMMEDIATE
    raise ValueError(f'Unknown policy {policy!r}, expected one of {POLICIES}')


def interference_bound(system: WordSystem, n: int, budget: Optional[int] = None) -> Optional[int]:
    """Longest run of at most n devices under the immediate scheduler; None when over budget.

    Raises ScenarioRejected when some devices can interfere forever.
    """
    bound = 0
    for k in range(2, min(n, len(system)) + 1):
        try:
            report = verify_every_n(system, k, SchedulerModel.IMMEDIATE, budget, workers=1)
        except BudgetExceeded:
            return None
        if not report.passed:
            subset = [i + 1 for i in report.failures[0].subset]
            raise ScenarioRejected(f'Devices {subset} can interfere forever')
        bound = max(bound, report.worst_run)
    return bound


@dataclass
class FreqDemoReport:
    policy: str
    bound: Optional[int]
    interference: Dict[int, int]
    quiet_intervals: List[QuietInterval]
    log: pd.DataFrame = field(repr=False)

    @property
    def max_interference(self) -> int:
        return max(self.interference.values(), default=0)

    @property
    def long_quiet_intervals(self) -> List[QuietInterval]:
        if self.bound is None:
            return []
        return [q for q in self.quiet_intervals if q.end - q.start > self.bound]

    @property
    def passed(self) -> bool:
        return all(q.safe_at_end for q in self.long_quiet_intervals)

    def summary(self) -> str:
        outputs = [get_header('Frequency Hopping')]
        info = [['Policy', self.policy],
                ['Bound T', 'unknown' if self.bound is None else self.bound],
                ['Max interference', self.max_interference],
                ['Interference events', len(self.log)],
                ['Quiet intervals > T', len(self.long_quiet_intervals)],
                ['Ended conflict-free', sum(q.safe_at_end for q in self.long_quiet_intervals)]]
        outputs.append(tabulate.tabulate(info, tablefmt='grid'))
        devices = [[d + 1, count] for d, count in sorted(self.interference.items())]
        outputs.append('[ Devices ]')
        outputs.append(tabulate.tabulate(devices, headers=['Device', 'Hops'], tablefmt='grid'))
        return '\n'.join(outputs)


class _Simulation:

    def __init__(self, scenario: ChurnScenario, strategy: Strategy, model: SchedulerModel,
                 seed: Optional[int]) -> None:
        self._scenario = scenario
        self._strategy = strategy
        self._model = model
        self._rng = np.random.default_rng(seed)
        self._env = simpy.Environment()
        # device -> (start, moves)
        self._resident: Dict[int, List[int]] = {}
        self.interference = collections.Counter()
        self.rows = []
        self.quiet: List[QuietInterval] = []

    def configuration(self) -> Configuration:
        players = tuple(PlayerState(d, s, k) for d, (s, k) in sorted(self._resident.items()))
        return Configuration(self._scenario.system, players)

    def _churn(self):
        events = collections.defaultdict(list)
        for e in self._scenario.events:
            events[e.time].append(e)
        times = sorted(set(events) | {self._scenario.horizon})
        previous = None
        for time in times:
            yield self._env.timeout(time - self._env.now)
            if previous is not None:
                self.quiet.append(QuietInterval(previous, time, is_safe(self.configuration())))
            for e in events.get(time, []):
                if e.kind == ARRIVE:
                    start = int(self._rng.integers(len(self._scenario.system[e.device])))
                    self._resident[e.device] = [start, 0]
                else:
                    del self._resident[e.device]
            previous = time

    def _scheduler(self):
        yield self._env.timeout(0.5)
        while self._env.now < self._scenario.horizon:
            configuration = self.configuration()
            moves = legal_moves(configuration, self._model)
            if moves:
                moved = self._strategy.choose(configuration, moves)
                devices = configuration.word_indices
                chairs = configuration.chairs
                for i in sorted(conflicted(configuration)):
                    hopped = i in moved
                    self.rows.append({'time': self._env.now, 'device': devices[i] + 1,
                                      'chair': chairs[i], 'hopped': hopped})
                    if hopped:
                        self.interference[devices[i]] += 1
                        self._resident[devices[i]][1] += 1
            yield self._env.timeout(1)

    def run(self) -> None:
        self._env.process(self._churn())
        self._env.process(self._scheduler())
        self._env.run(until=self._scenario.horizon + 0.25)


def freq_demo(scenario: ChurnScenario,
              seed: Optional[int] = None,
              policy: str = 'canonical',
              budget: Optional[int] = None,
              bound: Optional[int] = None,
              logging_file: Optional[str] = None) -> FreqDemoReport:
    """Runs the churn scenario and checks that quiet intervals longer than T end conflict-free.

    params:
      scenario: Devices, capacity and churn events.
      seed: Seed of the device start offsets and of the random policy.
      policy: 'canonical', 'random' or 'worst'.
      budget: Transition budget for computing T and the worst-case policy.
      bound: Precomputed T. Computed from the word system when None.
      logging_file: File for the report.
    """
    strategy, model = make_policy(policy, seed, budget)
    if bound is None:
        bound = interference_bound(scenario.system, scenario.n, budget)
    simulation = _Simulation(scenario, strategy, model, seed)
    simulation.run()
    log = pd.DataFrame(simulation.rows, columns=['time', 'device', 'chair', 'hopped'])
    devices = {e.device for e in scenario.events}
    interference = {d: simulation.interference.get(d, 0) for d in devices}
    report = FreqDemoReport(policy, bound, interference, simulation.quiet, log)
    name = 'freq_demo' if logging_file is None else f'freq_demo.{os.path.basename(logging_file)}'
    logging_config(logging_file, detail=False, name=name).info(report.summary())
    return report

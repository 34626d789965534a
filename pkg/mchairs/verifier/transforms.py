import itertools
import json
import sys
from concurrent import futures
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from mchairs.engine import SchedulerModel
from mchairs.utils import MchairsError, get_max_workers
from mchairs.words import (
    Word,
    WordSystem,
    concat,
    concat_all,
    is_full,
    power,
    prefix_of_power,
)
from .solver import decide
from .verdict import Cyclic, Winner


class BoundViolated(MchairsError):
    """Lifting exponent below the required bound."""


@dataclass
class SubsetResult:
    subset: Tuple[int, ...]
    winner: Winner
    max_run: Optional[int]


@dataclass
class EveryNReport:
    """Outcome of deciding every n-subset of a word system, sorted by subset."""
    n: int
    model: SchedulerModel
    results: List[SubsetResult] = field(default_factory=list)

    @property
    def failures(self) -> List[SubsetResult]:
        return [r for r in self.results if r.winner == Winner.SCHEDULER]

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def worst_run(self) -> Optional[int]:
        """Longest run over all subsets; None when some subset fails."""
        if not self.passed:
            return None
        return max([r.max_run for r in self.results], default=0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'model': str(self.model),
            'passed': self.passed,
            'results': [{'words': [i + 1 for i in r.subset],
                         'winner': str(r.winner),
                         'max_run': r.max_run} for r in self.results],
        }

    def save(self, path: str) -> None:
        with open(path, 'w') as f:
            json.dump(self.to_dict(), f, indent=2)
            f.write('\n')


def _decide_subset(system: WordSystem, subset: Tuple[int, ...], model: SchedulerModel,
                   budget: Optional[int]) -> SubsetResult:
    verdict = decide(system, model, word_indices=subset, budget=budget)
    return SubsetResult(subset, verdict.winner, verdict.max_run)


def verify_every_n(system: WordSystem,
                   n: int,
                   model: SchedulerModel = SchedulerModel.CANONICAL,
                   budget: Optional[int] = None,
                   workers: Optional[int] = None) -> EveryNReport:
    """Decides every n-subset of the system, one subset per task."""
    if not 1 <= n <= len(system):
        raise ValueError(f'Team size {n} outside of 1..{len(system)}')
    subsets = list(itertools.combinations(range(len(system)), n))
    workers = get_max_workers(workers)
    results = []
    if workers == 1:
        iterator = tqdm(subsets, ncols=80) if sys.stdout.isatty() else subsets
        for subset in iterator:
            results.append(_decide_subset(system, subset, model, budget))
    else:
        with futures.ThreadPoolExecutor(max_workers=workers) as pool:
            tasks = {subset: pool.submit(_decide_subset, system, subset, model, budget)
                     for subset in subsets}
            iterator = tqdm(tasks.items(), ncols=80) if sys.stdout.isatty() else tasks.items()
            for _, t in iterator:
                results.append(t.result())
    results.sort(key=lambda r: r.subset)
    return EveryNReport(n, model, results)


def extension_length(system: WordSystem,
                     n: int,
                     model: SchedulerModel = SchedulerModel.IMMEDIATE,
                     budget: Optional[int] = None,
                     workers: Optional[int] = None) -> int:
    """One more than the longest run over all n-subsets and starts, at least 1."""
    report = verify_every_n(system, n, model, budget, workers)
    if not report.passed:
        subset = report.failures[0].subset
        raise Cyclic(f'Words {[i + 1 for i in subset]} lose, the system is not every-{n} winning')
    return max(report.worst_run + 1, 1)


def extend(system: WordSystem,
           n: int,
           model: SchedulerModel = SchedulerModel.IMMEDIATE,
           budget: Optional[int] = None,
           workers: Optional[int] = None) -> Word:
    """A new word keeping the system every-n winning.

    Each of the first n words is padded to at least t letters by repetition, where t
    exceeds every run length, and the padded words are concatenated.
    """
    if len(system) < n:
        raise ValueError(f'Need at least {n} words to extend, got {len(system)}')
    t = extension_length(system, n, model, budget, workers)
    padded = [w if len(w) >= t else prefix_of_power(w, t) for w in system.words[:n]]
    return concat_all(padded)


def _check_collection(words: Sequence[Word], i: int) -> None:
    if not 0 <= i < len(words):
        raise IndexError(f'Word index {i} outside of 0..{len(words) - 1}')


def lift_power(collection: WordSystem, i: int, sigma: Word, k: int) -> WordSystem:
    """Replaces word i by (w_i sigma)^2 and raises every other word to the power k.

    Terminality is kept for full sigma and k >= |w_i| + |sigma|.
    """
    _check_collection(collection.words, i)
    bound = len(collection[i]) + len(sigma)
    if k < bound:
        raise BoundViolated(f'Exponent {k} is below |w_{i + 1}| + |sigma| = {bound}')
    if not is_full(sigma, collection.m):
        raise ValueError(f'sigma is not full over 1..{collection.m}')
    words = tuple(power(concat(w, sigma), 2) if j == i else power(w, k)
                  for j, w in enumerate(collection.words))
    return WordSystem(collection.m, words)


def lift_concat(collection: WordSystem, i: int, extra: Sequence[Word], k: int) -> WordSystem:
    """lift_power with sigma the cyclic continuation of the full word list after word i."""
    _check_collection(collection.words, i)
    words = list(collection.words) + list(extra)
    sigma = concat_all(words[i + 1:] + words[:i])
    return lift_power(collection, i, sigma, k)


def power_lift(system: WordSystem, r: int) -> WordSystem:
    return WordSystem(system.m, tuple(power(w, r) for w in system.words), system.labels)

from typing import Optional

import numpy as np

from mchairs.engine import SchedulerModel
from mchairs.utils import logging_config
from mchairs.verifier import Winner, decide
from mchairs.words import Word, WordSystem

_MAX_REGENERATIONS = 1000


def _draw_words(N: int, m: int, L: int, seed: int) -> WordSystem:
    rng = np.random.default_rng(seed)
    letters = rng.integers(1, m + 1, size=(N, L))
    return WordSystem(m, tuple(Word(tuple(row)) for row in letters.tolist()),
                      labels=tuple(f'seed{seed}-w{i + 1}' for i in range(N)))


def random_words(N: int, m: int, L: int, seed: int, regenerate: bool = True) -> WordSystem:
    """N words of L letters drawn independently and uniformly from [m].

    When some word misses a chair and ``regenerate`` is set, the whole system is drawn
    again with the next seed. Labels record the seed that was used.
    """
    if L < 1 or N < 1 or m < 1:
        raise ValueError(f'Invalid sizes N={N} m={m} L={L}')
    for attempt in range(_MAX_REGENERATIONS):
        system = _draw_words(N, m, L, seed + attempt)
        if not regenerate or all(system.full_flags):
            if attempt:
                logging_config(name='mchairs').debug('Regenerated random words %d times', attempt)
            return system
    raise ValueError(f'No full system after {_MAX_REGENERATIONS} draws; L={L} is too short for m={m}')


def random_perms(N: int, m: int, seed: int) -> WordSystem:
    rng = np.random.default_rng(seed)
    perms = tuple(Word(tuple((rng.permutation(m) + 1).tolist())) for _ in range(N))
    return WordSystem(m, perms)


def search_permutation_system(n: int,
                              m: int,
                              tries: int,
                              seed: int,
                              model: SchedulerModel = SchedulerModel.CANONICAL,
                              budget: Optional[int] = None) -> Optional[WordSystem]:
    """Samples teams of n random permutations of [m] until one is certified winning."""
    for k in range(tries):
        system = random_perms(n, m, seed + k)
        if decide(system, model, budget=budget).winner == Winner.TEAM:
            return system
    return None

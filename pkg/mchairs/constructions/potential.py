"""Potential arithmetic for random words with m/n chairs per player.

A configuration with i occupied chairs has potential x^(n-i). When the canonical pair
moves, the three children of a configuration with a fraction q of occupied chairs carry
at most a drop_bound fraction of its potential in expectation.
"""

import collections
import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from .random_systems import random_words

MonteCarloDrop = collections.namedtuple('MonteCarloDrop', ['mean', 'std', 'samples'])

_MAX_X = 1E6


@dataclass(frozen=True)
class PotentialParams:
    q: float
    x: float

    def __post_init__(self):
        if not 0 <= self.q < 1:
            raise ValueError(f'Crowding ratio must be in [0, 1), got {self.q}')
        if self.x < 1:
            raise ValueError(f'Potential base must be at least 1, got {self.x}')


def drop_bound(params: PotentialParams) -> float:
    q, x = params.q, params.x
    return 2 * q + 2 * (1 - q) / x + q * q * x + 2 * q * (1 - q) + (1 - q) ** 2 / x


def optimal_x(q: float) -> float:
    """Base minimizing drop_bound, from the derivative of q^2 x + (1-q)(3-q)/x."""
    if q <= 0:
        return math.inf
    return max(math.sqrt((1 - q) * (3 - q)) / q, 1.0)


def min_drop_bound(q: float) -> float:
    """Smallest drop_bound over x >= 1, by bounded scalar minimization."""
    res = optimize.minimize_scalar(lambda x: drop_bound(PotentialParams(q, x)),
                                   bounds=(1.0, _MAX_X), method='bounded',
                                   options={'xatol': 1E-9})
    return float(min(res.fun, drop_bound(PotentialParams(q, min(optimal_x(q), _MAX_X)))))


def critical_ratio() -> float:
    """Chairs per player above which some base makes the expected potential drop."""
    q = optimize.brentq(lambda v: min_drop_bound(v) - 1, 1E-3, 0.5, xtol=1E-12)
    return 1 / q


def sample_potential_drop(n: int,
                          m: int,
                          L: int = 64,
                          samples: int = 10 ** 4,
                          seed: int = 0,
                          x: float = 23 / 2) -> MonteCarloDrop:
    """Mean ratio of the summed potential of the three canonical children to the parent.

    Players get random words; unsafe configurations are drawn by rejection from uniform
    positions, in batches.
    """
    words = random_words(n, m, L, seed)
    arrays = np.stack([w.array for w in words.words])
    rng = np.random.default_rng(seed)
    pairs = list(itertools.combinations(range(n), 2))
    ratios = []
    collected = 0
    while collected < samples:
        positions = rng.integers(0, L, size=(4 * samples, n))
        chairs = arrays[np.arange(n), positions]
        canonical = np.full(len(positions), -1, dtype=np.int64)
        for k, (i, j) in enumerate(pairs):
            canonical[(chairs[:, i] == chairs[:, j]) & (canonical < 0)] = k
        keep = canonical >= 0
        positions, chairs, canonical = positions[keep], chairs[keep], canonical[keep]
        following = arrays[np.arange(n), (positions + 1) % L]
        parent = _occupied(chairs)
        total = np.zeros(len(chairs))
        for moved in ('first', 'second', 'both'):
            child = chairs.copy()
            for k, (i, j) in enumerate(pairs):
                rows = canonical == k
                if moved in ('first', 'both'):
                    child[rows, i] = following[rows, i]
                if moved in ('second', 'both'):
                    child[rows, j] = following[rows, j]
            total += np.power(float(x), parent - _occupied(child))
        ratios.append(total)
        collected += len(total)
    values = np.concatenate(ratios)[:samples]
    return MonteCarloDrop(float(values.mean()), float(values.std()), len(values))


def _occupied(chairs: np.ndarray) -> np.ndarray:
    ordered = np.sort(chairs, axis=1)
    return 1 + (np.diff(ordered, axis=1) != 0).sum(axis=1)

"""Explicit permutations of [p^2] from polynomial graphs over a prime field."""

import itertools
from dataclasses import dataclass
from typing import FrozenSet, List, Sequence, Tuple

import numpy as np
from sympy import isprime

from mchairs.utils import MchairsError
from mchairs.words import Word, WordSystem


class Unsupported(MchairsError):
    """Field order outside of the supported primes."""


class Field:
    """A finite field of prime order p."""

    def __init__(self, p: int) -> None:
        if not isinstance(p, (int, np.integer)):
            raise Unsupported('Field order must be an integer')
        if not isprime(int(p)):
            raise Unsupported(f'Field order {p} is not a prime')
        self.p = int(p)

    @property
    def elements(self) -> np.ndarray:
        return np.arange(self.p, dtype=np.int64)

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def evaluate(self, coefficients: Sequence[int], x):
        """Evaluates sum(c_i x^i) by Horner's rule, coefficients from degree 0 up."""
        res = np.zeros_like(x)
        for c in reversed(coefficients):
            res = self.add(self.mul(res, x), c)
        return res


@dataclass(frozen=True)
class FieldPermutationFamily:
    p: int
    d: int
    m: int
    perms: WordSystem
    polys: Tuple[Tuple[int, ...], ...]

    def block(self, index: int, j: int) -> FrozenSet[Tuple[int, int]]:
        """Points (x, f(x) + j) of polynomial index."""
        return block_points(Field(self.p), self.polys[index], j)


def block_points(field: Field, coefficients: Sequence[int], j: int) -> FrozenSet[Tuple[int, int]]:
    x = field.elements
    y = field.add(field.evaluate(coefficients, x), j)
    return frozenset(zip(x.tolist(), y.tolist()))


def admissible_polynomials(p: int, d: int) -> List[Tuple[int, ...]]:
    """Coefficients (from degree 0) of degree-2d polynomials with zero constant term."""
    if d < 1:
        raise ValueError(f'Degree parameter must be positive, got {d}')
    polys = []
    for middle in itertools.product(range(p), repeat=2 * d - 1):
        for lead in range(1, p):
            polys.append((0,) + middle + (lead,))
    polys.sort()
    return polys


def field_permutation(field: Field, coefficients: Sequence[int]) -> Word:
    """Blocks j = 0..p-1 in turn, each in ascending x, point (x, y) on chair p*x + y + 1."""
    p = field.p
    x = field.elements
    fx = field.evaluate(coefficients, x)
    letters = []
    for j in range(p):
        y = field.add(fx, j)
        letters.extend((p * x + y + 1).tolist())
    return Word(tuple(letters))


def ff_permutations(p: int, d: int) -> FieldPermutationFamily:
    field = Field(p)
    polys = admissible_polynomials(p, d)
    perms = tuple(field_permutation(field, f) for f in polys)
    return FieldPermutationFamily(p, d, p * p, WordSystem(p * p, perms), tuple(polys))

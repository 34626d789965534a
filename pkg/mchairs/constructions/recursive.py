"""Recursive construction of the optimal words over 2n-1 and 2n chairs.

Level 1 is s = [11] over one chair and w = [1122] over two chairs. A step shifts the
q source words up by one chair, sets k to their total length and builds

    first word:   1 interleaved with (src_1 ... src_q)^(2(2q+1))
    later words:  (src_{i-1})^(k(2q+1)) followed by 1

From w at level n this gives q + 1 = n + 1 s-words. From s at level n it gives q = n
w-words, so the last s-word only shows up inside the first w-word.
"""

import itertools
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from mchairs.utils import BudgetExceeded, DEFAULT_MAX_WORD_LENGTH
from mchairs.words import (
    Word,
    WordSystem,
    concat,
    concat_all,
    interleave,
    power,
    restrict,
    shift,
)

_BASE_S = Word((1, 1))
_BASE_W = Word((1, 1, 2, 2))


@dataclass(frozen=True)
class RecursivePair:
    n: int
    s_words: WordSystem
    w_words: WordSystem


def _step_lengths(lengths: Sequence[int], count: int) -> List[int]:
    q = len(lengths)
    k = sum(lengths)
    first = 2 * k * 2 * (2 * q + 1)
    rest = [lengths[i - 1] * k * (2 * q + 1) + 1 for i in range(1, count)]
    return [first] + rest


def _step(words: Sequence[Word], count: int) -> List[Word]:
    q = len(words)
    shifted = [shift(w, 1) for w in words]
    k = sum(len(w) for w in shifted)
    first = interleave(1, power(concat_all(shifted), 2 * (2 * q + 1)))
    rest = [concat(power(shifted[i - 1], k * (2 * q + 1)), Word((1,))) for i in range(1, count)]
    return [first] + rest


def recursive_lengths(n: int) -> Tuple[List[int], List[int]]:
    """Word lengths of the level-n s and w families, computed without building them."""
    if n < 1:
        raise ValueError(f'Level must be positive, got {n}')
    s_lengths, w_lengths = [len(_BASE_S)], [len(_BASE_W)]
    for level in range(2, n + 1):
        s_lengths = _step_lengths(w_lengths, level)
        w_lengths = _step_lengths(s_lengths, level)
    return s_lengths, w_lengths


def build_recursive(n: int, max_word_length: Optional[int] = None) -> RecursivePair:
    max_word_length = max_word_length or DEFAULT_MAX_WORD_LENGTH
    s_lengths, w_lengths = recursive_lengths(n)
    longest = max(s_lengths + w_lengths)
    if longest > max_word_length:
        raise BudgetExceeded(f'Level {n} words have lengths s={s_lengths} w={w_lengths}',
                             longest, max_word_length)
    s_words, w_words = [_BASE_S], [_BASE_W]
    for level in range(2, n + 1):
        s_words = _step(w_words, level)
        w_words = _step(s_words, level)
    return RecursivePair(n,
                         WordSystem(2 * n - 1, tuple(s_words)),
                         WordSystem(2 * n, tuple(w_words)))


def restriction_families(words: WordSystem, n: int) -> Iterator[Tuple[Tuple[int, ...], WordSystem]]:
    """Yields (A, restriction of the first p words to A) for every p <= n and |A| = 2p - 1."""
    for p in range(1, min(n, len(words)) + 1):
        for chairs in itertools.combinations(range(1, words.m + 1), 2 * p - 1):
            restricted = tuple(restrict(w, chairs) for w in words.words[:p])
            yield chairs, WordSystem(words.m, restricted)

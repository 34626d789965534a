"""Longest common subsequence of cyclic permutations."""

import bisect
import collections
import itertools
from typing import Sequence

import numpy as np

from mchairs.words import Word, WordLike, WordSystem, as_word, is_permutation, rotate

LcsCertificate = collections.namedtuple('LcsCertificate', ['certified', 'r', 'm', 'n'])


def lcs_length(a: Sequence[int], b: Sequence[int]) -> int:
    """Standard dynamic program over an (|a|+1) x (|b|+1) table."""
    if not len(a) or not len(b):
        return 0
    mtx = np.zeros((len(a) + 1, len(b) + 1), dtype=np.int64)
    for i in range(1, len(a) + 1):
        for j in range(1, len(b) + 1):
            if a[i - 1] == b[j - 1]:
                mtx[i][j] = mtx[i - 1][j - 1] + 1
            else:
                mtx[i][j] = max(mtx[i - 1][j], mtx[i][j - 1])
    return int(mtx[-1][-1])


def _longest_increasing(values: Sequence[int]) -> int:
    tails = []
    for v in values:
        k = bisect.bisect_left(tails, v)
        if k == len(tails):
            tails.append(v)
        else:
            tails[k] = v
    return len(tails)


def _check_permutations(a: Word, b: Word) -> int:
    m = len(a)
    if not is_permutation(a, m) or not is_permutation(b, m):
        raise ValueError('Cyclic LCS is defined here for two permutations of the same [m]')
    return m


def cyclic_lcs(a: WordLike, b: WordLike) -> int:
    """Largest LCS over all rotations of a and all rotations of b.

    For permutations the LCS of two rotations is the longest increasing run of the
    positions, in the rotated b, of the letters of the rotated a.
    """
    a, b = as_word(a), as_word(b)
    m = _check_permutations(a, b)
    where = {c: k for k, c in enumerate(b)}
    best = 0
    for r in range(m):
        base = [where[c] for c in a.letters[r:] + a.letters[:r]]
        for s in range(m):
            best = max(best, _longest_increasing([(k - s) % m for k in base]))
            if best == m:
                return m
    return best


def cyclic_lcs_exhaustive(a: WordLike, b: WordLike) -> int:
    """Same value as cyclic_lcs from the plain dynamic program on every rotation pair."""
    a, b = as_word(a), as_word(b)
    m = _check_permutations(a, b)
    return max(lcs_length(rotate(a, r).letters, rotate(b, s).letters)
               for r in range(m) for s in range(m))


def pairwise_cyclic_lcs(perms: WordSystem) -> np.ndarray:
    size = len(perms)
    table = np.zeros((size, size), dtype=np.int64)
    for i in range(size):
        table[i][i] = len(perms[i])
    for i, j in itertools.combinations(range(size), 2):
        table[i][j] = table[j][i] = cyclic_lcs(perms[i], perms[j])
    return table


def check_lcs_certificate(perms: WordSystem, n: int) -> LcsCertificate:
    """r is the largest pairwise cyclic LCS; m > (n-1) r certifies that no word is fully traversed.

    A failed certificate is inconclusive.
    """
    if len(perms) < 2:
        raise ValueError('At least two permutations are required')
    table = pairwise_cyclic_lcs(perms)
    np.fill_diagonal(table, 0)
    r = int(table.max())
    m = perms.m
    return LcsCertificate(m > (n - 1) * r, r, m, n)

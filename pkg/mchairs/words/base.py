import functools
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from mchairs.utils import MchairsError


class NotPresent(MchairsError):
    """Chair does not occur in the word."""


class EmptyWordError(MchairsError):
    """Game operation on a word emptied by restriction."""


class AlphabetError(MchairsError):
    """Letter outside of the alphabet of the system."""


@dataclass(frozen=True)
class Word:
    """A finite cyclic word of chairs, stored as one period.

    An empty word is only produced by restriction and is flagged by ``is_empty``.
    """
    letters: Tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(c) for c in self.letters)
        for c in letters:
            if c < 1:
                raise AlphabetError(f'Chair {c} is not positive')
        object.__setattr__(self, 'letters', letters)

    @classmethod
    def from_string(cls, text: str) -> 'Word':
        """Parses '2343' as single-digit chairs, or '10 2 3' / '10,2,3' as separated chairs."""
        text = text.strip()
        if not text:
            return cls(())
        if re.search(r'[\s,]', text):
            return cls(tuple(int(s) for s in re.split(r'[\s,]+', text) if s))
        return cls(tuple(int(ch) for ch in text))

    @property
    def is_empty(self) -> bool:
        return not self.letters

    @functools.cached_property
    def array(self) -> np.ndarray:
        return np.array(self.letters, dtype=np.int64)

    @property
    def alphabet(self) -> frozenset:
        return frozenset(self.letters)

    def at(self, position: int) -> int:
        if self.is_empty:
            raise EmptyWordError('Empty word has no chairs')
        return self.letters[position % len(self.letters)]

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, item):
        return self.letters[item]

    def __str__(self) -> str:
        if all(c < 10 for c in self.letters):
            return ''.join(str(c) for c in self.letters)
        return ' '.join(str(c) for c in self.letters)

    def __repr__(self) -> str:
        text = str(self)
        if len(text) > 40:
            text = text[:37] + '...'
        return f'Word({text!r}, len={len(self)})'


WordLike = Union[Word, str, Sequence[int]]


def as_word(word: WordLike) -> Word:
    if isinstance(word, Word):
        return word
    if isinstance(word, str):
        return Word.from_string(word)
    return Word(tuple(word))


@dataclass(frozen=True)
class WordSystem:
    """N words over the alphabet [m]."""
    m: int
    words: Tuple[Word, ...]
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        words = tuple(as_word(w) for w in self.words)
        object.__setattr__(self, 'words', words)
        if self.m < 1:
            raise AlphabetError(f'Alphabet size {self.m} is not positive')
        for i, word in enumerate(words):
            if word.letters and max(word.letters) > self.m:
                raise AlphabetError(f'Word {i + 1} uses chair {max(word.letters)} above m={self.m}')
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != len(words):
                raise ValueError('One label per word is required')
            object.__setattr__(self, 'labels', labels)

    @classmethod
    def from_strings(cls, words: Iterable[WordLike], m: Optional[int] = None) -> 'WordSystem':
        words = [as_word(w) for w in words]
        if m is None:
            m = max([max(w.letters) for w in words if w.letters] or [1])
        return cls(m, tuple(words))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __getitem__(self, item) -> Word:
        return self.words[item]

    @property
    def lengths(self) -> List[int]:
        return [len(w) for w in self.words]

    @property
    def full_flags(self) -> List[bool]:
        return [w.alphabet == frozenset(range(1, self.m + 1)) for w in self.words]

    @property
    def permutation_flags(self) -> List[bool]:
        return [len(w) == self.m and w.alphabet == frozenset(range(1, self.m + 1))
                for w in self.words]

    def subsystem(self, indices: Iterable[int]) -> 'WordSystem':
        indices = list(indices)
        labels = tuple(self.labels[i] for i in indices) if self.labels else None
        return WordSystem(self.m, tuple(self.words[i] for i in indices), labels)

    def with_word(self, word: Word, label: Optional[str] = None) -> 'WordSystem':
        labels = None
        if self.labels is not None:
            labels = self.labels + (label or f'w{len(self.words) + 1}',)
        return WordSystem(self.m, self.words + (word,), labels)

    def check_nonempty(self) -> None:
        for i, word in enumerate(self.words):
            if word.is_empty:
                raise EmptyWordError(f'Word {i + 1} is empty')

"""Word algebra: concatenation, powers, interleaving, restriction and renaming."""

from typing import Callable, Iterable, Mapping, Union

from .base import NotPresent, Word, WordLike, as_word

ChairMap = Union[Mapping[int, int], Callable[[int], int]]


def concat(a: WordLike, b: WordLike) -> Word:
    a, b = as_word(a), as_word(b)
    return Word(a.letters + b.letters)


def concat_all(words: Iterable[WordLike]) -> Word:
    letters = []
    for word in words:
        letters.extend(as_word(word).letters)
    return Word(tuple(letters))


def power(w: WordLike, r: int) -> Word:
    if r < 1:
        raise ValueError(f'Power must be positive, got {r}')
    return Word(as_word(w).letters * r)


def interleave(c: int, w: WordLike) -> Word:
    """Returns c w[0] c w[1] ... c w[-1]."""
    letters = []
    for letter in as_word(w):
        letters.append(c)
        letters.append(letter)
    return Word(tuple(letters))


def restrict(w: WordLike, chairs: Iterable[int]) -> Word:
    """Deletes the letters outside of chairs. The result may be empty."""
    chairs = frozenset(chairs)
    return Word(tuple(c for c in as_word(w) if c in chairs))


def relabel(w: WordLike, f: ChairMap) -> Word:
    w = as_word(w)
    mapping = f.__getitem__ if isinstance(f, Mapping) else f
    images = {}
    for c in sorted(w.alphabet):
        try:
            images[c] = int(mapping(c))
        except KeyError:
            raise ValueError(f'Chair {c} has no image') from None
    if len(set(images.values())) != len(images):
        raise ValueError('Chair map is not injective on the word')
    return Word(tuple(images[c] for c in w))


def shift(w: WordLike, offset: int) -> Word:
    return relabel(w, lambda c: c + offset)


def is_full(w: WordLike, m: int) -> bool:
    return as_word(w).alphabet >= frozenset(range(1, m + 1))


def is_permutation(w: WordLike, m: int) -> bool:
    w = as_word(w)
    return len(w) == m and is_full(w, m)


def rotate(w: WordLike, k: int) -> Word:
    """Cyclic rotation that starts at index k."""
    w = as_word(w)
    if w.is_empty:
        return w
    k %= len(w)
    return Word(w.letters[k:] + w.letters[:k])


def rotate_to_first(w: WordLike, c: int) -> Word:
    """Rotation of w that begins at the first occurrence of chair c."""
    w = as_word(w)
    try:
        k = w.letters.index(c)
    except ValueError:
        raise NotPresent(f'Chair {c} does not occur in {w!r}') from None
    return rotate(w, k)


def prefix_of_power(w: WordLike, t: int) -> Word:
    """First t letters of a power of w long enough to hold them."""
    w = as_word(w)
    if t < 1:
        raise ValueError(f'Prefix length must be positive, got {t}')
    r = -(-t // len(w))
    return Word((w.letters * r)[:t])

from mchairs.words import Word, WordSystem


def first_letter_system(n: int) -> WordSystem:
    """n rotations of 1..n, word i starting on chair i.

    Started on their first letters the players never meet. A scheduler that picks the
    starts wins whenever n >= 2, since n chairs are fewer than 2n - 1.
    """
    if n < 1:
        raise ValueError(f'Team size must be positive, got {n}')
    base = list(range(1, n + 1))
    return WordSystem(n, tuple(Word(tuple(base[i:] + base[:i])) for i in range(n)))

"""Plain text format of word systems.

    mc-words v1
    m=<int> count=<int>
    <chair> <chair> ...      (one word per line)
"""

import re
from typing import List

from mchairs.utils import MchairsError
from .base import AlphabetError, Word, WordSystem

MAGIC = 'mc-words v1'
_HEADER_PATTERN = re.compile(r'^m=([0-9]+) count=([0-9]+)$')
_CHAIR_PATTERN = re.compile(r'[0-9]+')


class ParseError(MchairsError):
    """Malformed word-system file."""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f'line {line}: {message}')
        self.line = line


def serialize_system(system: WordSystem) -> str:
    lines = [MAGIC, f'm={system.m} count={len(system)}']
    for word in system:
        lines.append(' '.join(str(c) for c in word))
    return '\n'.join(lines) + '\n'


def parse_system(text: str) -> WordSystem:
    lines = text.split('\n')
    if lines and lines[-1] == '':
        lines.pop()
    if not lines or lines[0].strip() != MAGIC:
        raise ParseError(f'expected {MAGIC!r}', 1)
    if len(lines) < 2:
        raise ParseError('missing header', 2)
    match = _HEADER_PATTERN.match(lines[1].strip())
    if not match:
        raise ParseError(f'expected "m=<int> count=<int>", got {lines[1]!r}', 2)
    m, count = int(match.group(1)), int(match.group(2))
    body = lines[2:]
    if len(body) != count:
        line_number = len(lines) + 1 if len(body) < count else count + 3
        raise ParseError(f'expected {count} words, found {len(body)}', line_number)
    words: List[Word] = []
    for offset, line in enumerate(body):
        line_number = offset + 3
        tokens = line.split()
        letters = []
        for token in tokens:
            if not _CHAIR_PATTERN.fullmatch(token):
                raise ParseError(f'invalid chair {token!r}', line_number)
            chair = int(token)
            if not 1 <= chair <= m:
                raise ParseError(f'chair {chair} outside of 1..{m}', line_number)
            letters.append(chair)
        words.append(Word(tuple(letters)))
    try:
        return WordSystem(m, tuple(words))
    except AlphabetError as e:
        raise ParseError(str(e), 2) from e


def load_system(path: str) -> WordSystem:
    with open(path, 'r') as f:
        return parse_system(f.read())


def save_system(system: WordSystem, path: str) -> None:
    with open(path, 'w') as f:
        f.write(serialize_system(system))

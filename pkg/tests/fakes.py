import functools
from typing import List

from mchairs.constructions import build_recursive
from mchairs.words import WordSystem, save_system


class FakeInput:
    """Scripted answers for the interactive scheduler, recording every prompt and message."""

    def __init__(self, answers: List[str]) -> None:
        self._answers = list(answers)
        self.prompts = []
        self.messages = []

    def __call__(self, prompt: str) -> str:
        self.prompts.append(prompt)
        if not self._answers:
            return 'q'
        return self._answers.pop(0)

    def output(self, message: str) -> None:
        self.messages.append(message)


def make_system(*words, m=None) -> WordSystem:
    return WordSystem.from_strings(words, m)


@functools.lru_cache(maxsize=None)
def s2_system() -> WordSystem:
    return build_recursive(2).s_words


def lower_bound_system() -> WordSystem:
    """Four words over four chairs where only the first two share a first letter."""
    return make_system('1234', '1324', '2143', '3412', m=4)


def save(system: WordSystem, path) -> None:
    save_system(system, str(path))

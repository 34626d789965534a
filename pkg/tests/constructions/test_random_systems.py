import pytest

from mchairs.constructions import random_perms, random_words, search_permutation_system
from mchairs.verifier import Winner, decide, verify_every_n
from mchairs.words import is_permutation


def test_random_words():
    system = random_words(3, 4, 10, seed=1)

    assert len(system) == 3
    assert system.lengths == [10, 10, 10]
    assert all(system.full_flags)
    assert all(label.startswith('seed') for label in system.labels)
    assert random_words(3, 4, 10, seed=1) == system


def test_random_words_without_regeneration():
    system = random_words(2, 5, 3, seed=0, regenerate=False)

    assert not any(system.full_flags)


def test_random_words_cannot_be_full():
    with pytest.raises(ValueError):
        random_words(2, 5, 3, seed=0)
    with pytest.raises(ValueError):
        random_words(0, 5, 3, seed=0)


def test_random_perms():
    system = random_perms(4, 6, seed=3)

    assert all(is_permutation(w, 6) for w in system)
    assert random_perms(4, 6, seed=3) == system


def test_search_permutation_system():
    # Two permutations of three chairs win exactly when they are not rotations of each other.
    system = search_permutation_system(2, 3, tries=20, seed=0)

    assert system is not None
    assert decide(system).winner == Winner.TEAM


def test_search_permutation_system_gives_up():
    assert search_permutation_system(2, 2, tries=5, seed=0) is None


def test_desk_scale_words_are_full():
    system = random_words(6, 21, 64, seed=1)

    assert all(system.full_flags)
    assert system.lengths == [64] * 6


@pytest.mark.slow
def test_random_triples_win():
    passed = 0
    for seed in range(100):
        system = random_words(6, 21, 64, seed=seed)
        passed += verify_every_n(system, 3).passed

    assert passed >= 95

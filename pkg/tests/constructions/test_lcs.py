import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from mchairs.constructions import (
    check_lcs_certificate,
    cyclic_lcs,
    cyclic_lcs_exhaustive,
    ff_permutations,
    lcs_length,
    pairwise_cyclic_lcs,
)
from mchairs.verifier import is_terminal
from mchairs.words import Word, rotate
from ..fakes import make_system

perm_pairs = st.integers(min_value=1, max_value=7).flatmap(
    lambda m: st.tuples(st.permutations(range(1, m + 1)), st.permutations(range(1, m + 1))))


def test_lcs_length():
    assert lcs_length('1234', '1324') == 3
    assert lcs_length('', '12') == 0
    assert lcs_length([1, 2, 3], [4, 5]) == 0


def test_cyclic_lcs():
    assert cyclic_lcs('1234', '4321') == 2
    assert cyclic_lcs('1234', '2341') == 4
    assert cyclic_lcs('1234', '1324') == 3


def test_cyclic_lcs_needs_permutations():
    with pytest.raises(ValueError):
        cyclic_lcs('1123', '1234')
    with pytest.raises(ValueError):
        cyclic_lcs('123', '1234')


@given(perm_pairs)
def test_cyclic_lcs_matches_exhaustive(pair):
    a, b = (Word(tuple(p)) for p in pair)
    assert cyclic_lcs(a, b) == cyclic_lcs_exhaustive(a, b)


def test_pairwise_table():
    perms = make_system('1234', '4321', '1324')

    table = pairwise_cyclic_lcs(perms)

    np.testing.assert_array_equal(np.diag(table), [4, 4, 4])
    np.testing.assert_array_equal(table, table.T)
    assert table[0][1] == 2


def test_certificate():
    perms = make_system('1234', '4321')

    assert check_lcs_certificate(perms, 2) == (True, 2, 4, 2)
    assert not check_lcs_certificate(perms, 3).certified
    with pytest.raises(ValueError):
        check_lcs_certificate(make_system('1234'), 2)


def test_field_permutations_have_short_common_subsequences():
    family = ff_permutations(5, 1)

    certificate = check_lcs_certificate(family.perms, 2)

    assert certificate.r < family.m
    assert certificate.m == 25


@given(perm_pairs)
def test_cyclic_lcs_symmetric(pair):
    a, b = (Word(tuple(p)) for p in pair)
    assert cyclic_lcs(a, b) == cyclic_lcs(b, a)


@given(perm_pairs, st.integers(min_value=0, max_value=10), st.integers(min_value=0, max_value=10))
def test_cyclic_lcs_ignores_rotations(pair, r, s):
    a, b = (Word(tuple(p)) for p in pair)
    assert cyclic_lcs(rotate(a, r), rotate(b, s)) == cyclic_lcs(a, b)


@pytest.mark.slow
def test_certified_pairs_are_terminal():
    perms = ff_permutations(5, 1).perms

    certificate = check_lcs_certificate(perms, 2)

    assert certificate.certified
    assert certificate.r <= 20
    for pair in list(itertools.combinations(range(len(perms)), 2))[:10]:
        assert is_terminal(perms.subsystem(pair)).terminal, pair

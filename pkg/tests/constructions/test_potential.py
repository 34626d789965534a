import math

import pytest

from mchairs.constructions import (
    PotentialParams,
    critical_ratio,
    drop_bound,
    min_drop_bound,
    optimal_x,
    sample_potential_drop,
)


def test_drop_bound():
    assert drop_bound(PotentialParams(1 / 7, 23 / 2)) == pytest.approx(0.978, abs=1E-3)
    assert drop_bound(PotentialParams(0, 1)) == pytest.approx(3)


@pytest.mark.parametrize('q,x', [(1, 2), (-0.1, 2), (0.2, 0.5)])
def test_invalid_params(q, x):
    with pytest.raises(ValueError):
        PotentialParams(q, x)


def test_optimal_x():
    assert math.isinf(optimal_x(0))
    assert optimal_x(0.9) == 1.0
    q = 1 / 7
    assert min_drop_bound(q) == pytest.approx(drop_bound(PotentialParams(q, optimal_x(q))), abs=1E-6)
    assert min_drop_bound(q) <= drop_bound(PotentialParams(q, 23 / 2))


def test_critical_ratio():
    assert critical_ratio() == pytest.approx(4 + 2 * math.sqrt(2), abs=1E-3)


def test_sample_potential_drop():
    drop = sample_potential_drop(3, 21, L=64, samples=10 ** 4, seed=0)

    assert drop.samples == 10 ** 4
    assert 0 < drop.mean < 0.99
    assert drop.std >= 0

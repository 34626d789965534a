import logging
import os

from mchairs.utils import (
    BUDGET_ENV,
    DEFAULT_BUDGET,
    MAX_WORKERS_ENV,
    BudgetExceeded,
    MchairsError,
    get_budget,
    get_header,
    get_max_workers,
    get_output_dir,
    logging_config,
)


def test_get_budget_default():
    assert get_budget() == DEFAULT_BUDGET


def test_get_budget_precedence(mocker):
    mocker.patch.dict(os.environ, {BUDGET_ENV: '500'})

    assert get_budget() == 500
    assert get_budget(20) == 20


def test_get_max_workers(mocker):
    assert get_max_workers() == 1
    assert get_max_workers(0) == 1
    mocker.patch.dict(os.environ, {MAX_WORKERS_ENV: '4'})
    assert get_max_workers() == 4
    assert get_max_workers(2) == 2


def test_budget_exceeded():
    e = BudgetExceeded('Graph', 300, 100)

    assert isinstance(e, MchairsError)
    assert (e.estimate, e.budget) == (300, 100)
    assert str(e) == 'Graph: estimate 300 exceeds budget 100'


def test_get_output_dir(mock_output_dir):
    output_dir = get_output_dir('verify')

    assert output_dir == str(mock_output_dir / 'verify')
    assert os.path.isdir(output_dir)


def test_get_header():
    header = get_header('Verdict')

    assert header.startswith('== [ Verdict ] ')
    assert len(header) == 80


def test_logging_config(tmp_path):
    path = str(tmp_path / 'log.txt')

    logger = logging_config(path, detail=False, name='mchairs.test')
    logger.debug('detail line')

    assert logger is logging_config(path, detail=False, name='mchairs.test')
    assert logger.level == logging.DEBUG
    with open(path) as f:
        assert f.read() == 'detail line\n'

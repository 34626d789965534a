import os

import pytest

from mchairs.utils import utils
from . import fakes


@pytest.fixture(autouse=True)
def mock_environment(mocker):
    mocker.patch.dict(os.environ, {utils.MAX_WORKERS_ENV: '1'})
    os.environ.pop(utils.BUDGET_ENV, None)


@pytest.fixture(autouse=True)
def mock_output_dir(mocker, tmp_path):
    output_dir = tmp_path / 'outputs'
    mocker.patch.object(utils, 'OUTPUT_DIR', str(output_dir))
    return output_dir


@pytest.fixture
def s2_system():
    return fakes.s2_system()


@pytest.fixture
def lower_bound_system():
    return fakes.lower_bound_system()


@pytest.fixture
def words_file(tmp_path):
    def write(system, name='system.words'):
        path = tmp_path / name
        fakes.save(system, path)
        return str(path)
    return write

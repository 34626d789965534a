"""Utility functions shared by multiple modules."""

import functools
import logging
import os
from typing import Optional

BASE_DIR = os.path.dirname(os.path.dirname(os.path.dirname(os.path.realpath(__file__))))
OUTPUT_DIR = os.path.join(BASE_DIR, 'outputs')

BUDGET_ENV = 'MCHAIRS_BUDGET'
MAX_WORKERS_ENV = 'MCHAIRS_MAX_WORKERS'
# Transitions of the configuration graph, i.e. states times moves per state.
DEFAULT_BUDGET = 10 ** 8
DEFAULT_MAX_WORD_LENGTH = 10 ** 6
DEFAULT_FACET_BUDGET = 10 ** 5
DEFAULT_MAX_STEPS = 10 ** 4


class MchairsError(Exception):
    """Base error of the workbench."""


class BudgetExceeded(MchairsError):
    """Work estimate above the configured budget."""

    def __init__(self, message: str, estimate: int, budget: int) -> None:
        super().__init__(f'{message}: estimate {estimate} exceeds budget {budget}')
        self.estimate = estimate
        self.budget = budget


def get_budget(budget: Optional[int] = None) -> int:
    """Gets the transition budget.

    An explicit value wins over the environment, which wins over the default.
    """
    if budget is not None:
        return int(budget)
    env_value = os.environ.get(BUDGET_ENV)
    if env_value:
        return int(env_value)
    return DEFAULT_BUDGET


def get_max_workers(workers: Optional[int] = None) -> int:
    if workers is not None:
        return max(int(workers), 1)
    return max(int(os.environ.get(MAX_WORKERS_ENV, '1')), 1)


def get_output_dir(name: str) -> str:
    output_dir = os.path.join(OUTPUT_DIR, name)
    os.makedirs(output_dir, exist_ok=True)
    return output_dir


@functools.lru_cache(maxsize=None)
def logging_config(logging_file=None, detail=True, name=None) -> logging.Logger:
    """Configuration for logging."""
    logger = logging.getLogger(name=name)
    logger.setLevel(logging.DEBUG)
    logger.propagate = False
    if detail:
        formatter = logging.Formatter(
            '[%(levelname)s] [%(asctime)s] [%(filename)s:%(lineno)d] %(message)s')
    else:
        formatter = logging.Formatter('%(message)s')
    stream_handler = logging.StreamHandler()
    stream_handler.setLevel(logging.INFO)
    stream_handler.setFormatter(formatter)
    logger.addHandler(stream_handler)
    if logging_file:
        file_handler = logging.FileHandler(logging_file)
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)
    return logger


def get_header(title):
    header_left = '== [ %s ] ' % (title,)
    return header_left + '=' * (80 - len(header_left))

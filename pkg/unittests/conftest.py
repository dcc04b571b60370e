# -*- coding: utf-8 -*-
"""Module unittests.conftest.py

Registers the --seed option seeding every random corpus of the suite.
"""

import pytest

from perm_closure.config.constants import DEFAULT_SEED

def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED,
                     help="seed for random automaton corpora")

@pytest.fixture
def seed(request):
    return request.config.getoption("--seed", default=DEFAULT_SEED)

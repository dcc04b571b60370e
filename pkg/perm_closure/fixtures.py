# -*- coding: utf-8 -*-
"""Module perm_closure.fixtures.py

Access to the automata and expression files shipped under data/.
"""

import inspect
import os

from perm_closure.automaton_parser import load_automaton
from perm_closure.config.constants import EXPRESSIONS_RELATIVE_DIR
from perm_closure.config.constants import EXPRESSION_SUFFIX
from perm_closure.config.constants import FIXTURES_RELATIVE_DIR
from perm_closure.config.constants import FIXTURE_NAMES
from perm_closure.config.constants import FIXTURE_SUFFIX
from perm_closure.exceptions.argument_exception import ArgumentException

def package_dir():
    return os.path.dirname(inspect.getfile(package_dir))

def fixture_path(name):
    """path of the shipped automaton file for a fixture name

    Raises:
        ArgumentException: name is not a shipped fixture
    """

    if name not in FIXTURE_NAMES:
        raise ArgumentException("unknown fixture " + repr(name) + ", choose "
                                + "from " + ", ".join(FIXTURE_NAMES))
    return os.path.join(package_dir(), FIXTURES_RELATIVE_DIR,
                        name + FIXTURE_SUFFIX)

def load_fixture(name):
    return load_automaton(fixture_path(name))

def expression_names():
    directory = os.path.join(package_dir(), EXPRESSIONS_RELATIVE_DIR)
    return sorted(f[:-len(EXPRESSION_SUFFIX)] for f in os.listdir(directory)
                  if f.endswith(EXPRESSION_SUFFIX))

def expression_path(name):
    """path of the shipped expression file for a name

    Raises:
        ArgumentException: name is not a shipped expression
    """

    names = expression_names()
    if name not in names:
        raise ArgumentException("unknown expression " + repr(name)
                                + ", choose from " + ", ".join(names))
    return os.path.join(package_dir(), EXPRESSIONS_RELATIVE_DIR,
                        name + EXPRESSION_SUFFIX)

# -*- coding: utf-8 -*-
"""Module unittests.test_oracle.test_sigma.py

This module contains methods to test the sigma module via pytest. Grid
labels from the recurrence are compared with labels computed from words.
"""

import pytest

from perm_closure.automata.alphabet import Alphabet
from perm_closure.engine.grid import GridBounds
from perm_closure.engine.grid import compute_grid
from perm_closure.engine.label_function import label_fn_expr_nfa
from perm_closure.engine.label_function import label_fn_iter
from perm_closure.engine.label_function import label_fn_perm
from perm_closure.engine.label_function import label_fn_shuffle
from perm_closure.exceptions.oracle_exception import OracleCapException
from perm_closure.expressions.ast import IterShuffle
from perm_closure.expressions.ast import Shuffle
from perm_closure.expressions.compiler import expression_nfa
from perm_closure.fixtures import load_fixture
from perm_closure.oracle.sigma import bruteforce_sigma
from perm_closure.oracle.sigma import iterated_shuffle_sets
from perm_closure.oracle.sigma import vectors_below
from unittests.constants import SIGMA_CORPUS_SIZE
from unittests.constants import SIGMA_SUM_CAP
from unittests.methods import fixture_atom_table
from unittests.methods import fixture_atoms
from unittests.methods import random_corpus

def assert_grid_matches(lf, extents, sum_cap=SIGMA_SUM_CAP):
    grid = compute_grid(lf, GridBounds.box(extents))
    for p in grid.order:
        if sum(p) <= sum_cap:
            assert grid.label(p) == bruteforce_sigma(lf, p), \
                repr(lf) + " at " + str(p)

def test_vectors_below():
    assert vectors_below((1, 2)) == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1),
                                     (1, 2)]

def test_fixture_grids():
    for name in ["even_a", "odd_a", "z3", "s3", "ab_star"]:
        assert_grid_matches(label_fn_perm(load_fixture(name)), (6, 6))
    assert_grid_matches(label_fn_perm(load_fixture("z3_unary")), (6,))

def test_corpus_grids(seed):
    for d in random_corpus(seed, SIGMA_CORPUS_SIZE):
        assert_grid_matches(label_fn_perm(d), (6, 6))

def test_iter_and_shuffle_grids(seed):
    """asserts the restart and cascade label functions match their words"""

    table = fixture_atom_table()
    for d in table.values():
        assert_grid_matches(label_fn_iter(d), (6, 6))
    assert_grid_matches(label_fn_shuffle([table["E"], table["O"]]), (6, 6))
    assert_grid_matches(label_fn_shuffle([table["O"], table["Z"],
                                          table["O"]]), (6, 6))
    for d1, d2 in zip(random_corpus(seed, 10), random_corpus(seed + 1, 10)):
        assert_grid_matches(label_fn_shuffle([d1, d2]), (6, 6))

    atoms = fixture_atoms()
    nfa, _ = expression_nfa(IterShuffle(Shuffle(atoms["E"], atoms["O"])),
                            Alphabet("ab"))
    assert_grid_matches(label_fn_expr_nfa(nfa), (6, 6))

def test_iterated_shuffle_sets():
    """asserts the definition based label on odd_a at (2, 0)"""

    sets = iterated_shuffle_sets(load_fixture("odd_a"), (2, 0))
    assert sets.reached == {0}
    assert sets.restarted == {1}
    assert sets.accepting
    assert sets.label == 3

    sets = iterated_shuffle_sets(load_fixture("even_a"), (0, 0))
    assert not sets.accepting
    assert sets.label == 1

def test_iterated_shuffle_sets_match_grid(seed):
    corpus = list(fixture_atom_table().values()) + random_corpus(seed, 20)
    for d in corpus:
        grid = compute_grid(label_fn_iter(d), GridBounds.box((5, 5)))
        for p in grid.order:
            if sum(p) <= 4:
                assert grid.label(p) == iterated_shuffle_sets(d, p).label, \
                    str(d) + " at " + str(p)

def test_sum_cap():
    lf = label_fn_perm(load_fixture("even_a"))
    with pytest.raises(OracleCapException) as e:
        bruteforce_sigma(lf, (4, 3), sum_cap=5)
    assert str(e.value) == "coordinate sum 7 of (4, 3) exceeds cap 5"
    with pytest.raises(OracleCapException):
        iterated_shuffle_sets(load_fixture("even_a"), (4, 3))

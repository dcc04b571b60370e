# -*- coding: utf-8 -*-
"""Module unittests.test_engine.test_builders.py

This module contains methods to test the builders module via pytest: state
counts against their bounds, and languages against the bounded oracle.
"""

import logging

import pytest

from perm_closure.automata.constructions import dfa_to_nfa
from perm_closure.automata.constructions import equivalent
from perm_closure.automata.constructions import is_commutative
from perm_closure.automata.permutation import letter_orders
from perm_closure.engine.builders import build_expr_nfa_dfa
from perm_closure.engine.builders import build_iterstar_dfa
from perm_closure.engine.builders import build_perm_dfa
from perm_closure.engine.builders import build_shuffle_dfa
from perm_closure.engine.builders import perm_bound
from perm_closure.engine.builders import shuffle_bound
from perm_closure.exceptions.automaton_exception import \
    NotPermutationException
from perm_closure.exceptions.construction_exception import GridCapException
from perm_closure.exceptions.construction_exception import \
    ShuffleAlphabetException
from perm_closure.expressions.ast import Atom
from perm_closure.expressions.ast import IterShuffle
from perm_closure.expressions.ast import Shuffle
from perm_closure.fixtures import load_fixture
from perm_closure.functions.general import lcm
from perm_closure.functions.general import product
from perm_closure.oracle.check_report import cross_check
from unittests.constants import CORPUS_SIZE
from unittests.constants import ORACLE_MAX_LEN
from unittests.constants import SHUFFLE_TUPLE_COUNT
from unittests.methods import corpus_pairs
from unittests.methods import corpus_tuples
from unittests.methods import random_corpus

even_a = load_fixture("even_a")
odd_a = load_fixture("odd_a")

def test_perm_fixtures():
    """asserts sizes of the closure of fixture group languages"""

    c = build_perm_dfa(even_a, minimize=False)
    assert c.kind == "perm"
    assert c.unminimized_size == 8
    assert c.state_bound == 8
    assert c.dfa.state_count == 8
    assert equivalent(c.dfa, even_a)
    assert build_perm_dfa(even_a).dfa == even_a

    unary = build_perm_dfa(load_fixture("z3_unary"))
    assert unary.unminimized_size == 9
    assert unary.dfa.state_count == 3

    s3 = build_perm_dfa(load_fixture("s3"))
    assert is_commutative(s3.dfa)
    assert s3.dfa.accepts("aa") and s3.dfa.accepts("aabb")
    assert not s3.dfa.accepts("a") and not s3.dfa.accepts("ab")

def test_perm_rejects_non_permutation():
    with pytest.raises(NotPermutationException):
        build_perm_dfa(load_fixture("ab_star"))
    with pytest.raises(NotPermutationException):
        build_iterstar_dfa(load_fixture("ab_star"))

def test_grid_cap():
    with pytest.raises(GridCapException):
        build_perm_dfa(even_a, grid_cap=7)

def test_shrink_rays():
    """asserts the shrunk box gives the same language with fewer states"""

    c = build_perm_dfa(even_a, minimize=False, shrink_rays=True)
    assert c.unminimized_size == 2
    assert c.bounds.extents == (2, 1)
    assert equivalent(c.dfa, even_a)

def test_iterstar_fixtures():
    """asserts the empty-word state is added exactly for non-final starts"""

    odd = build_iterstar_dfa(odd_a)
    assert odd.epsilon_state
    assert odd.unminimized_size == 9
    assert odd.state_bound == 9
    assert odd.dfa.state_count == 3
    assert odd.dfa.accepts("") and odd.dfa.accepts("aa")
    assert not odd.dfa.accepts("b")

    even = build_iterstar_dfa(even_a)
    assert not even.epsilon_state
    assert even.unminimized_size == 8

def test_shuffle_fixtures():
    c = build_shuffle_dfa([even_a, odd_a])
    assert c.state_bound == 4 ** 2 * 2
    assert c.unminimized_size == 32
    assert equivalent(c.dfa, odd_a)

def test_shuffle_alphabet_mismatch():
    with pytest.raises(ShuffleAlphabetException) as e:
        build_shuffle_dfa([even_a, load_fixture("z3_unary")])
    assert str(e.value).startswith("alphabet mismatch")

def test_build_log(caplog):
    """asserts the minimized size is logged only when minimizing"""

    caplog.set_level(logging.INFO)
    build_perm_dfa(even_a)
    assert "perm: 8 grid states (bound 8), 2 after minimization" \
        in caplog.text

    caplog.clear()
    c = build_perm_dfa(even_a, minimize=False)
    assert "perm: 8 grid states (bound 8), not minimized" in caplog.text
    assert "after minimization" not in caplog.text
    assert c.dfa is c.grid_dfa

def test_expr_nfa():
    c = build_expr_nfa_dfa(dfa_to_nfa(load_fixture("z3")))
    assert c.kind == "expr-nfa"
    assert equivalent(c.dfa, load_fixture("z3"))

def test_perm_bound_on_corpus(seed):
    """asserts the grid automaton has exactly prod_j |Q| L_j states"""

    for d in random_corpus(seed, CORPUS_SIZE):
        c = build_perm_dfa(d, minimize=False)
        exact = product(d.state_count * L for L in letter_orders(d))
        assert c.unminimized_size == exact
        assert exact <= c.state_bound == perm_bound(d)
        assert is_commutative(build_perm_dfa(d).dfa)

def test_iterstar_bound_on_corpus(seed):
    for d in random_corpus(seed, CORPUS_SIZE):
        c = build_iterstar_dfa(d, minimize=False)
        assert c.unminimized_size <= perm_bound(d) + 1
        assert c.epsilon_state == (d.start not in d.finals)
        assert c.unminimized_size == perm_bound(d) + int(c.epsilon_state)

def test_shuffle_bound_on_corpus(seed):
    """asserts (sum |Q_i|)^k prod_j lcm_i L_j^(i) for pairs and triples"""

    corpus = random_corpus(seed, CORPUS_SIZE)
    for ds in corpus_tuples(corpus, SHUFFLE_TUPLE_COUNT):
        c = build_shuffle_dfa(ds, minimize=False)
        total = sum(d.state_count for d in ds)
        orders = [letter_orders(d) for d in ds]
        exact = product(total * lcm(*(o[j] for o in orders))
                        for j in range(2))
        assert c.unminimized_size == exact == shuffle_bound(ds)

def test_perm_against_oracle(seed):
    """asserts Parikh images agree with the oracle up to length 7"""

    for d in random_corpus(seed, CORPUS_SIZE):
        report = cross_check(Atom("A", d), build_perm_dfa(d).dfa,
                             ORACLE_MAX_LEN)
        assert report.passed, report.render()

def test_iterstar_against_oracle(seed):
    for d in random_corpus(seed, CORPUS_SIZE):
        report = cross_check(IterShuffle(Atom("A", d)),
                             build_iterstar_dfa(d).dfa, ORACLE_MAX_LEN)
        assert report.passed, report.render()

def test_shuffle_against_oracle(seed):
    for ds in corpus_pairs(random_corpus(seed, CORPUS_SIZE)):
        e = Shuffle(Atom("A", ds[0]), Atom("B", ds[1]))
        report = cross_check(e, build_shuffle_dfa(ds).dfa, ORACLE_MAX_LEN)
        assert report.passed, report.render()

# -*- coding: utf-8 -*-
"""Module unittests.test_automata.test_dfa.py

This module contains methods to test the dfa and nfa modules via pytest.
"""

import pytest

from perm_closure.automata.alphabet import Alphabet
from perm_closure.automata.constructions import dfa_to_nfa
from perm_closure.automata.dfa import Dfa
from perm_closure.automata.nfa import Nfa
from perm_closure.exceptions.automaton_exception import AutomatonException
from perm_closure.fixtures import load_fixture

even_a = load_fixture("even_a")
ab_star = load_fixture("ab_star")

def test_run():
    """asserts runs follow the transition table"""

    assert even_a.run("aab") == 0
    assert even_a.run("a") == 1
    assert even_a.run("a", state=1) == 0
    assert even_a.accepts("")
    assert not even_a.accepts("ab")
    assert even_a.delta(0, "a") == 1
    assert even_a.column(0) == (1, 0)

def test_invalid_tables():
    """asserts incomplete or out-of-range tables are rejected"""

    ab = Alphabet("ab")
    with pytest.raises(AutomatonException):
        Dfa(ab, 2, [[1, 0]], 0, [0])
    with pytest.raises(AutomatonException):
        Dfa(ab, 2, [[1, 0], [0]], 0, [0])
    with pytest.raises(AutomatonException):
        Dfa(ab, 2, [[1, 2], [0, 1]], 0, [0])
    with pytest.raises(AutomatonException):
        Dfa(ab, 2, [[1, 0], [0, 1]], 5, [0])

def test_reachable_and_renumber():
    d = Dfa(Alphabet("a"), 3, [[2], [1], [0]], 0, [2])
    assert d.reachable() == [0, 2]
    renumbered = d.renumber([2, 0, 1])
    assert renumbered.start == 1
    assert renumbered.finals == frozenset([0])
    assert renumbered.accepts("a") and not renumbered.accepts("aa")

def test_equality():
    assert load_fixture("even_a") == even_a
    assert even_a != load_fixture("odd_a")
    assert len({even_a, load_fixture("even_a")}) == 1

def test_nfa_accepts():
    """asserts the epsilon-NFA run and the empty word flag"""

    ab = Alphabet("ab")
    nfa = Nfa(ab, 2, [(0, "a", 1), (1, "b", 0)], [(1, 0)], [0], [1])
    assert nfa.epsilon_closure([1]) == frozenset([0, 1])
    assert nfa.accepts("a")
    assert nfa.accepts("aa")
    assert not nfa.accepts("")
    assert not nfa.accepts("b")

    nullable = Nfa(ab, 1, [(0, "a", 0), (0, "b", 0)], [], [0], [],
                   accepts_empty=True)
    assert nullable.accepts("")
    assert not nullable.accepts("a")

def test_letter_core():
    assert dfa_to_nfa(even_a).letter_core_is_permutation()
    assert not dfa_to_nfa(ab_star).letter_core_is_permutation()
    assert dfa_to_nfa(ab_star).letter_function("a") == [1, 2, 2]

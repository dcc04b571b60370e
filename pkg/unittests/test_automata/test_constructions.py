# -*- coding: utf-8 -*-
"""Module unittests.test_automata.test_constructions.py

This module contains methods to test the constructions module via pytest.
"""

import pytest

from perm_closure.automata.alphabet import Alphabet
from perm_closure.automata.constructions import add_empty_word
from perm_closure.automata.constructions import canonicalize
from perm_closure.automata.constructions import complement
from perm_closure.automata.constructions import determinize
from perm_closure.automata.constructions import disjoint_sum
from perm_closure.automata.constructions import empty_dfa
from perm_closure.automata.constructions import enumerate_words
from perm_closure.automata.constructions import epsilon_dfa
from perm_closure.automata.constructions import equivalent
from perm_closure.automata.constructions import intersection_product
from perm_closure.automata.constructions import is_commutative
from perm_closure.automata.constructions import member
from perm_closure.automata.constructions import minimize
from perm_closure.automata.constructions import shuffle_product
from perm_closure.automata.constructions import union_product
from perm_closure.automata.constructions import universal_dfa
from perm_closure.automata.dfa import Dfa
from perm_closure.automata.permutation import validate_permutation
from perm_closure.exceptions.automaton_exception import \
    AlphabetMismatchException
from perm_closure.exceptions.automaton_exception import \
    ForeignLetterException
from perm_closure.exceptions.automaton_exception import \
    NotPermutationException
from perm_closure.fixtures import load_fixture
from unittests.constants import CORPUS_SIZE
from unittests.constants import ORACLE_MAX_LEN
from unittests.methods import corpus_pairs
from unittests.methods import random_corpus

even_a = load_fixture("even_a")
odd_a = load_fixture("odd_a")
ab = Alphabet("ab")

def test_member_and_enumerate():
    assert member(even_a, "abab")
    assert not member(even_a, "ab")
    with pytest.raises(ForeignLetterException):
        member(even_a, "abc")
    assert enumerate_words(even_a, 2) == ["", "b", "aa", "bb"]
    assert enumerate_words(empty_dfa(ab), 3) == []
    assert enumerate_words(epsilon_dfa(ab), 3) == [""]

def test_add_empty_word():
    """asserts the empty word is added and nothing else"""

    d = add_empty_word(odd_a)
    assert d.state_count == 3
    assert d.accepts("") and d.accepts("a") and d.accepts("ba")
    assert not d.accepts("aa") and not d.accepts("b")

def test_products():
    """asserts union and intersection of complementary group languages"""

    assert minimize(union_product([even_a, odd_a])) == universal_dfa(ab)
    assert minimize(intersection_product([even_a, odd_a])) == empty_dfa(ab)
    assert equivalent(complement(even_a), odd_a)

def test_product_errors():
    with pytest.raises(NotPermutationException):
        union_product([even_a, load_fixture("ab_star")])
    with pytest.raises(AlphabetMismatchException):
        union_product([even_a, load_fixture("z3_unary")])

def test_shuffle_product():
    """asserts the shuffle of even and odd a-counts is the odd a-counts"""

    nfa = shuffle_product([even_a, odd_a])
    assert nfa.accepts("a") and nfa.accepts("bab")
    assert not nfa.accepts("aa")
    assert equivalent(determinize(nfa), odd_a)

def test_minimize_removes_unreachable():
    d = disjoint_sum(even_a, odd_a)
    assert d.state_count == 4
    assert minimize(d) == even_a

def test_minimize_is_canonical(seed):
    """asserts equivalent automata minimize to the same table"""

    for d in random_corpus(seed, 20):
        m = minimize(d)
        assert equivalent(d, m)
        assert minimize(canonicalize(d)) == m
        assert minimize(disjoint_sum(d, odd_a)) == m
        assert m.state_count <= d.state_count

def test_is_commutative():
    assert is_commutative(even_a)
    assert is_commutative(load_fixture("z3"))
    assert not is_commutative(load_fixture("ab_star"))
    assert not is_commutative(load_fixture("s3"))

def test_epsilon_and_universal():
    d = epsilon_dfa(ab)
    assert d.accepts("") and not d.accepts("a")
    assert universal_dfa(ab).accepts("abba")
    unary = Dfa(Alphabet("a"), 1, [[0]], 0, [])
    assert minimize(unary) == empty_dfa(Alphabet("a"))

def test_union_product_on_corpus(seed):
    """asserts the union stays a permutation automaton with the union
    language on words of length <= 7"""

    for first, second in corpus_pairs(random_corpus(seed, CORPUS_SIZE)):
        union = union_product([first, second])
        assert validate_permutation(union).is_permutation
        for w in ab.words(ORACLE_MAX_LEN):
            assert union.accepts(w) == \
                (first.accepts(w) or second.accepts(w)), w

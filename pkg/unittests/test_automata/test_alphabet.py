# -*- coding: utf-8 -*-
"""Module unittests.test_automata.test_alphabet.py

This module contains methods to test the alphabet module via pytest.
"""

import pytest

from perm_closure.automata.alphabet import Alphabet
from perm_closure.exceptions.automaton_exception import AutomatonException
from perm_closure.exceptions.automaton_exception import \
    ForeignLetterException

ab = Alphabet("ab")

def test_index():
    """asserts letters are numbered in the given order"""

    assert ab.index("a") == 0
    assert ab.index("b") == 1
    assert Alphabet("ba").index("a") == 1
    assert "a" in ab and "c" not in ab
    assert str(ab) == "a b"

def test_invalid_alphabets():
    """asserts empty, duplicate and multi-character alphabets are rejected"""

    for letters in ["", "aa", ["ab"]]:
        with pytest.raises(AutomatonException):
            Alphabet(letters)

def test_foreign_letter():
    try:
        ab.check_word("abc")
        assert False
    except ForeignLetterException as e:
        assert str(e) == "letter 'c' not in alphabet a b"

def test_words():
    """asserts words come out in length-then-lex order"""

    assert list(ab.words(2)) == ["", "a", "b", "aa", "ab", "ba", "bb"]
    assert ab.word_count(9) == 1023
    assert ab.sorted_words({"ba", "b", "", "ab"}) == ["", "b", "ab", "ba"]

# -*- coding: utf-8 -*-
"""Module perm_closure.automata.alphabet.py

This module contains the Alphabet class. The order of the letters is fixed at
construction and defines the Parikh coordinate of every letter.
"""

import itertools

from perm_closure.exceptions.automaton_exception import AutomatonException
from perm_closure.exceptions.automaton_exception import \
    ForeignLetterException

class Alphabet(object):
    """Ordered, duplicate-free list of single-character letters

    Attributes:
        letters (tuple): letters a_1 ... a_k in coordinate order
    """

    def __init__(self, letters):
        """instantiate an Alphabet object

        Args:
            letters (iterable): single-character strings, at least one

        Raises:
            AutomatonException: empty alphabet, duplicates, or a letter that
                is not a single character
        """

        letters = tuple(letters)
        if len(letters) == 0:
            raise AutomatonException("alphabet must contain at least one "
                                     + "letter")
        for letter in letters:
            if not isinstance(letter, str) or len(letter) != 1:
                raise AutomatonException("alphabet letter " + repr(letter)
                                         + " is not a single character")
        if len(set(letters)) != len(letters):
            raise AutomatonException("alphabet contains duplicate letters: "
                                     + " ".join(letters))
        self.letters = letters
        self._index = {letter: j for j, letter in enumerate(letters)}

    def index(self, letter):
        """Parikh coordinate of a letter

        Raises:
            ForeignLetterException: letter outside the alphabet
        """

        try:
            return self._index[letter]
        except KeyError:
            raise ForeignLetterException("letter " + repr(letter)
                                         + " not in alphabet "
                                         + " ".join(self.letters))

    def check_word(self, word):
        """Raise ForeignLetterException unless every letter of word is known"""

        for letter in word:
            self.index(letter)

    def word_key(self, word):
        """Sort key for length-then-lexicographic order over this alphabet"""

        return (len(word), tuple(self.index(letter) for letter in word))

    def sorted_words(self, words):
        return sorted(words, key=self.word_key)

    def words(self, max_len):
        """Generate every word of length <= max_len, length-then-lex order"""

        for length in range(max_len + 1):
            for letters in itertools.product(self.letters, repeat=length):
                yield "".join(letters)

    def word_count(self, max_len):
        """Number of words of length <= max_len"""

        return sum(len(self) ** length for length in range(max_len + 1))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __contains__(self, letter):
        return letter in self._index

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.letters == other.letters

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.letters)

    def __str__(self):
        return " ".join(self.letters)

    def __repr__(self):
        return "Alphabet(" + repr("".join(self.letters)) + ")"

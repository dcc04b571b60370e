# -*- coding: utf-8 -*-
"""Module perm_closure.parikh.py

This module contains Parikh vectors, the Parikh morphism psi, and the
permutational closure of finite word sets.
"""

from perm_closure.exceptions.automaton_exception import AutomatonException

class ParikhVector(object):
    """Point of N_0^k, one coordinate per alphabet letter

    Vectors are ordered componentwise (a partial order); sorting a list of
    vectors should use the coords tuple as key.

    Attributes:
        coords (tuple): nonnegative letter counts in alphabet order
    """

    def __init__(self, coords):
        coords = tuple(coords)
        for c in coords:
            if c < 0:
                raise AutomatonException("Parikh coordinates must be "
                                         + "nonnegative: " + str(coords))
        self.coords = coords

    @classmethod
    def unit(cls, k, j):
        """e_j, the image of the single letter a_j"""

        return cls(tuple(1 if i == j else 0 for i in range(k)))

    @property
    def dimension(self):
        return len(self.coords)

    def total(self):
        """coordinate sum, the length of any word with this vector"""

        return sum(self.coords)

    def _check(self, other):
        if self.dimension != other.dimension:
            raise AutomatonException("Parikh vectors of different dimension")

    def __add__(self, other):
        self._check(other)
        return ParikhVector(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        self._check(other)
        return ParikhVector(a - b for a, b in zip(self.coords, other.coords))

    def __le__(self, other):
        self._check(other)
        return all(a <= b for a, b in zip(self.coords, other.coords))

    def __lt__(self, other):
        return self <= other and self != other

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def __eq__(self, other):
        return isinstance(other, ParikhVector) and self.coords == other.coords

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.coords)

    def __getitem__(self, j):
        return self.coords[j]

    def __iter__(self):
        return iter(self.coords)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def __repr__(self):
        return "ParikhVector(" + repr(self.coords) + ")"

def psi(w, alphabet):
    """Parikh vector of w

    Raises:
        ForeignLetterException: w contains a letter outside the alphabet
    """

    counts = [0] * len(alphabet)
    for letter in w:
        counts[alphabet.index(letter)] += 1
    return ParikhVector(counts)

def anagrams(w):
    """distinct rearrangements of w in lexicographic order

    Multiset next-permutation, so every anagram is produced exactly once.
    """

    letters = sorted(w)
    result = ["".join(letters)]
    n = len(letters)
    while True:
        i = n - 2
        while i >= 0 and letters[i] >= letters[i + 1]:
            i -= 1
        if i < 0:
            return result
        j = n - 1
        while letters[j] <= letters[i]:
            j -= 1
        letters[i], letters[j] = letters[j], letters[i]
        letters[i + 1:] = reversed(letters[i + 1:])
        result.append("".join(letters))

def perm_set(words):
    """union of the anagram classes of a finite word set"""

    closure = set()
    for w in words:
        if w not in closure:
            closure.update(anagrams(w))
    return closure

def parikh_image(words, alphabet):
    return {psi(w, alphabet) for w in words}

def words_with_vector(vector, alphabet):
    """every word whose Parikh vector is vector"""

    base = "".join(letter * count for letter, count in zip(alphabet, vector))
    return anagrams(base)

# -*- coding: utf-8 -*-
"""Module unittests.test_oracle.test_bounded.py

This module contains methods to test the bounded module via pytest.
"""

import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from perm_closure.automata.alphabet import Alphabet
from perm_closure.exceptions.oracle_exception import OracleCapException
from perm_closure.expressions.ast import Concat
from perm_closure.expressions.ast import Epsilon
from perm_closure.expressions.ast import IterShuffle
from perm_closure.expressions.ast import Shuffle
from perm_closure.expressions.ast import Star
from perm_closure.expressions.ast import Union
from perm_closure.oracle.bounded import BoundedLanguage
from perm_closure.oracle.bounded import FiniteAtom
from perm_closure.oracle.bounded import bounded_words
from perm_closure.oracle.bounded import shuffle_words
from perm_closure.parikh import parikh_image
from perm_closure.parikh import perm_set
from unittests.constants import ALGEBRA_MAX_LEN
from unittests.methods import fixture_atoms
from unittests.methods import random_shuffle_expressions

ab = Alphabet("ab")
atoms = fixture_atoms()
E, O, Z = atoms["E"], atoms["O"], atoms["Z"]
F = FiniteAtom(["ab", "b"], ab)
operands = [E, O, Z, F]
short_words = st.text(alphabet="ab", max_size=4)
all_operators = [Union, Concat, Shuffle, Star, IterShuffle]

def bounded(e):
    return bounded_words(e, ALGEBRA_MAX_LEN)

def test_atom_words():
    assert bounded_words(E, 2).words == {"", "b", "aa", "bb"}
    assert bounded_words(E, 2).sorted(ab) == ["", "b", "aa", "bb"]
    assert bounded_words(O, 6).restrict(4) == bounded_words(O, 4)
    assert bounded_words(Epsilon(), 3) == BoundedLanguage(3, [""])
    assert str(F) == "{b,ab}"

def test_iterated_shuffle_of_finite_set():
    """asserts {ab, ba} iterated gives the words with as many a as b"""

    result = bounded_words(IterShuffle(FiniteAtom(["ab", "ba"], ab)), 6)
    balanced = {w for w in ab.words(6) if w.count("a") == w.count("b")}
    assert result.words == balanced

def test_star_and_concat():
    assert bounded_words(Star(F), 3).words == \
        {"", "b", "ab", "bb", "bab", "abb", "bbb"}
    assert bounded_words(Concat(F, F), 3).words == {"bb", "bab", "abb"}
    assert bounded_words(Shuffle(F, FiniteAtom(["a"], ab)), 2).words == \
        {"ab", "ba"}

def test_oracle_caps():
    with pytest.raises(OracleCapException) as e:
        bounded_words(E, 10)
    assert str(e.value) == "2047 candidate words of length <= 10 exceed cap " \
        + "1023"

    with pytest.raises(OracleCapException):
        bounded_words(IterShuffle(O), 6, set_cap=5)

def test_perm_forgets_order():
    """asserts concatenation and shuffle have the same commutative closure"""

    for u, v in itertools.product(operands, repeat=2):
        assert perm_set(bounded(Concat(u, v)).words) == \
            perm_set(bounded(Shuffle(u, v)).words)
    for u in operands:
        assert perm_set(bounded(Star(u)).words) == \
            perm_set(bounded(IterShuffle(u)).words)

def test_shuffle_identities():
    """asserts the shuffle algebra identities on bounded word sets"""

    for u, v in itertools.permutations(operands, 2):
        assert bounded(Shuffle(u, v)) == bounded(Shuffle(v, u))
        assert bounded(IterShuffle(IterShuffle(u))) == \
            bounded(IterShuffle(u))
        assert bounded(IterShuffle(Union(u, v))) == \
            bounded(Shuffle(IterShuffle(u), IterShuffle(v)))
        assert bounded(IterShuffle(Shuffle(u, IterShuffle(v)))) == \
            bounded(Union(Shuffle(u, IterShuffle(Union(u, v))), Epsilon()))

    for u, v, w in itertools.permutations(operands, 3):
        assert bounded(Shuffle(Shuffle(u, v), w)) == \
            bounded(Shuffle(u, Shuffle(v, w)))
        assert bounded(Shuffle(u, Union(v, w))) == \
            bounded(Union(Shuffle(u, v), Shuffle(u, w)))

@given(short_words, short_words)
def test_shuffle_words(u, v):
    result = shuffle_words(u, v)
    assert u + v in result and v + u in result
    assert all(sorted(w) == sorted(u + v) for w in result)
    assert len(result) <= math.comb(len(u) + len(v), len(u))

def test_restriction_is_consistent(seed):
    """asserts evaluating at n and cutting to m equals evaluating at m"""

    for e in random_shuffle_expressions(seed, 40, operators=all_operators):
        full = bounded(e)
        for m in range(ALGEBRA_MAX_LEN):
            assert full.restrict(m) == bounded_words(e, m), (str(e), m)

def test_shuffle_and_concat_share_parikh_image(seed):
    expressions = random_shuffle_expressions(seed, 40,
                                             operators=all_operators)
    for u, v in zip(expressions[::2], expressions[1::2]):
        assert parikh_image(bounded(Shuffle(u, v)), ab) == \
            parikh_image(bounded(Concat(u, v)), ab), (str(u), str(v))

# -*- coding: utf-8 -*-
"""Module perm_closure.oracle.bounded.py

This module computes L(e) restricted to words of length <= n by brute force,
independently of the grid engine. Every factor of a word of length <= n has
length <= n, so products and closures can be evaluated under the cap.
"""

import functools

from perm_closure.config.constants import DEFAULT_ORACLE_CANDIDATE_CAP
from perm_closure.config.constants import DEFAULT_ORACLE_SET_CAP
from perm_closure.expressions.ast import Atom
from perm_closure.expressions.ast import Concat
from perm_closure.expressions.ast import Empty
from perm_closure.expressions.ast import Epsilon
from perm_closure.expressions.ast import IterShuffle
from perm_closure.expressions.ast import Shuffle
from perm_closure.expressions.ast import ShuffleExpr
from perm_closure.expressions.ast import Star
from perm_closure.expressions.ast import Union
from perm_closure.exceptions.expression_exception import ExpressionException
from perm_closure.exceptions.oracle_exception import OracleCapException

class FiniteAtom(ShuffleExpr):
    """An explicit finite word set, only understood by the oracle

    Attributes:
        words (frozenset): the words
        alphabet (Alphabet): alphabet the words are over
    """

    def __init__(self, words, alphabet):
        words = frozenset(words)
        for w in words:
            alphabet.check_word(w)
        self.words = words
        self.alphabet = alphabet

    def _key(self):
        return ("FiniteAtom", tuple(sorted(self.words)), self.alphabet)

    def __str__(self):
        return "{" + ",".join(self.alphabet.sorted_words(self.words)) + "}"

class BoundedLanguage(object):
    """Words of length <= max_len

    Attributes:
        max_len (int): n
        words (frozenset): every stored word has length <= n
    """

    def __init__(self, max_len, words):
        words = frozenset(words)
        for w in words:
            if len(w) > max_len:
                raise ExpressionException("word " + repr(w) + " longer than "
                                          + str(max_len))
        self.max_len = max_len
        self.words = words

    def restrict(self, m):
        """the language cut down to length <= m"""

        return BoundedLanguage(m, (w for w in self.words if len(w) <= m))

    def sorted(self, alphabet):
        """words in length-then-lex order over alphabet"""

        return alphabet.sorted_words(self.words)

    def __contains__(self, word):
        return word in self.words

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __eq__(self, other):
        return isinstance(other, BoundedLanguage) and \
            (self.max_len, self.words) == (other.max_len, other.words)

    def __repr__(self):
        return ("BoundedLanguage(max_len=" + str(self.max_len) + ", words="
                + str(len(self.words)) + ")")

@functools.lru_cache(maxsize=None)
def shuffle_words(u, v):
    """all interleavings of u and v"""

    if not u:
        return frozenset([v])
    if not v:
        return frozenset([u])
    return frozenset([u[0] + w for w in shuffle_words(u[1:], v)]
                     + [v[0] + w for w in shuffle_words(u, v[1:])])

def concat_sets(left, right, n):
    return {u + v for u in left for v in right if len(u) + len(v) <= n}

def shuffle_sets(left, right, n):
    result = set()
    for u in left:
        for v in right:
            if len(u) + len(v) <= n:
                result |= shuffle_words(u, v)
    return result

class BoundedEvaluator(object):
    """Evaluates expressions under a length cap, enforcing size caps

    Attributes:
        n (int): length cap
        candidate_cap (int): maximum number of candidate words scanned per
            automaton atom
        set_cap (int): maximum size of any intermediate word set
    """

    def __init__(self, n, candidate_cap=DEFAULT_ORACLE_CANDIDATE_CAP,
                 set_cap=DEFAULT_ORACLE_SET_CAP):
        self.n = n
        self.candidate_cap = candidate_cap
        self.set_cap = set_cap

    def checked(self, words):
        if len(words) > self.set_cap:
            raise OracleCapException("bounded word set of " + str(len(words))
                                     + " words exceeds cap "
                                     + str(self.set_cap))
        return words

    def closure(self, base, combine):
        """least set containing the empty word, closed under combine with base"""

        result = {""}
        frontier = {""}
        while frontier:
            new = combine(frontier, base, self.n) - result
            result |= new
            self.checked(result)
            frontier = new
        return result

    def evaluate(self, e):
        n = self.n
        if isinstance(e, Atom):
            alphabet = e.dfa.alphabet
            if alphabet.word_count(n) > self.candidate_cap:
                raise OracleCapException(
                    str(alphabet.word_count(n)) + " candidate words of length "
                    + "<= " + str(n) + " exceed cap "
                    + str(self.candidate_cap))
            return {w for w in alphabet.words(n) if e.dfa.accepts(w)}
        if isinstance(e, FiniteAtom):
            return {w for w in e.words if len(w) <= n}
        if isinstance(e, Epsilon):
            return {""}
        if isinstance(e, Empty):
            return set()
        if isinstance(e, Union):
            result = set()
            for c in e.children:
                result |= self.evaluate(c)
            return self.checked(result)
        if isinstance(e, (Concat, Shuffle)):
            combine = concat_sets if isinstance(e, Concat) else shuffle_sets
            result = self.evaluate(e.children[0])
            for c in e.children[1:]:
                result = self.checked(combine(result, self.evaluate(c), n))
            return result
        if isinstance(e, Star):
            return self.closure(self.evaluate(e.child), concat_sets)
        if isinstance(e, IterShuffle):
            return self.closure(self.evaluate(e.child), shuffle_sets)
        raise ExpressionException("cannot evaluate node " + repr(e))

def bounded_words(e, n, candidate_cap=DEFAULT_ORACLE_CANDIDATE_CAP,
                  set_cap=DEFAULT_ORACLE_SET_CAP):
    """L(e) restricted to words of length <= n

    Raises:
        OracleCapException: too many candidate words or too large a set
    """

    evaluator = BoundedEvaluator(n, candidate_cap, set_cap)
    return BoundedLanguage(n, evaluator.evaluate(e))

# -*- coding: utf-8 -*-
"""Module perm_closure.expressions.ast.py

This module contains the shuffle expression tree. Nodes are immutable and
compare structurally, so they can be hashed for loop detection while
rewriting. Rendering follows the parser's precedence: postfix '*' and '%'
bind tightest, then '.', then '@', then '|'.
"""

from perm_closure.exceptions.automaton_exception import \
    AlphabetMismatchException
from perm_closure.exceptions.expression_exception import ExpressionException

LEVEL_UNION = 0
LEVEL_SHUFFLE = 1
LEVEL_CONCAT = 2
LEVEL_POSTFIX = 3
LEVEL_ATOM = 4

class ShuffleExpr(object):
    """Base class of all expression nodes

    Attributes:
        children (tuple): sub-expressions, empty for leaves
    """

    level = LEVEL_ATOM
    children = ()

    def _key(self):
        return (type(self).__name__,) + tuple(self.children)

    def leaves(self):
        """atom-like leaves (nodes with an alphabet), left to right"""

        if not self.children:
            if getattr(self, "alphabet", None) is not None:
                yield self
            return
        for child in self.children:
            yield from child.leaves()

    def nodes(self):
        """all nodes in pre-order"""

        yield self
        for child in self.children:
            yield from child.nodes()

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return type(self).__name__ + "(" + str(self) + ")"

class Atom(ShuffleExpr):
    """A named automaton

    Attributes:
        name (str): identifier used in expression text
        dfa (Dfa): automaton denoting the atom's language
    """

    def __init__(self, name, dfa):
        self.name = name
        self.dfa = dfa

    @property
    def alphabet(self):
        return self.dfa.alphabet

    def _key(self):
        return ("Atom", self.name, self.dfa)

    def __str__(self):
        return self.name

class Epsilon(ShuffleExpr):
    """the language containing only the empty word"""

    alphabet = None

    def __str__(self):
        return "ε"

class Empty(ShuffleExpr):
    """the empty language"""

    alphabet = None

    def __str__(self):
        return "∅"

class _Nary(ShuffleExpr):

    operator = None

    def __init__(self, *children):
        if len(children) == 1 and isinstance(children[0], (list, tuple)):
            children = tuple(children[0])
        if len(children) < 2:
            raise ExpressionException(type(self).__name__ + " needs at least "
                                      + "two operands")
        self.children = tuple(children)

    def __str__(self):
        parts = []
        for child in self.children:
            text = str(child)
            if child.level <= self.level:
                text = "(" + text + ")"
            parts.append(text)
        return (" " + self.operator + " ").join(parts)

class Union(_Nary):
    level = LEVEL_UNION
    operator = "|"

class Shuffle(_Nary):
    level = LEVEL_SHUFFLE
    operator = "@"

class Concat(_Nary):
    level = LEVEL_CONCAT
    operator = "."

class _Postfix(ShuffleExpr):

    level = LEVEL_POSTFIX
    operator = None

    def __init__(self, child):
        self.children = (child,)

    @property
    def child(self):
        return self.children[0]

    def __str__(self):
        text = str(self.child)
        if self.child.level < LEVEL_POSTFIX:
            text = "(" + text + ")"
        return text + self.operator

class Star(_Postfix):
    """Kleene star"""

    operator = "*"

class IterShuffle(_Postfix):
    """iterated shuffle: all finite shuffles of words, the empty word included"""

    operator = "%"

def union_of(children):
    """Union for two or more children, the child itself for one, else Empty"""

    children = list(children)
    if not children:
        return Empty()
    if len(children) == 1:
        return children[0]
    return Union(children)

def shuffle_of(children):
    """Shuffle for two or more children, the child for one, else Epsilon"""

    children = list(children)
    if not children:
        return Epsilon()
    if len(children) == 1:
        return children[0]
    return Shuffle(children)

def expression_alphabet(e):
    """common alphabet of all atoms of e, None if e has no atoms

    Raises:
        AlphabetMismatchException: atoms use different alphabets
    """

    alphabet = None
    for leaf in e.leaves():
        if alphabet is None:
            alphabet = leaf.alphabet
        elif leaf.alphabet != alphabet:
            raise AlphabetMismatchException(
                "alphabet mismatch: atom " + str(leaf) + " uses {"
                + str(leaf.alphabet) + "}, expected {" + str(alphabet) + "}")
    return alphabet

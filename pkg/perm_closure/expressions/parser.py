# -*- coding: utf-8 -*-
"""Module perm_closure.expressions.parser.py

Recursive-descent parser for shuffle expression text::

    union    := shuffle ('|' shuffle)*
    shuffle  := concat ('@' concat)*
    concat   := postfix ('.' postfix)*
    postfix  := primary ('*' | '%')*
    primary  := IDENT | 'ε' | '∅' | '(' union ')'

Identifiers match [A-Za-z_][A-Za-z0-9_]* and are looked up in the atom
table. Chains of one operator produce a single n-ary node.
"""

import re

from perm_closure.expressions.ast import Atom
from perm_closure.expressions.ast import Concat
from perm_closure.expressions.ast import Empty
from perm_closure.expressions.ast import Epsilon
from perm_closure.expressions.ast import IterShuffle
from perm_closure.expressions.ast import Shuffle
from perm_closure.expressions.ast import Star
from perm_closure.expressions.ast import Union
from perm_closure.expressions.ast import expression_alphabet
from perm_closure.exceptions.expression_exception import \
    ExpressionSyntaxException
from perm_closure.exceptions.expression_exception import \
    UnknownAtomException

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
SYMBOLS = "|@.*%()ε∅"

def tokenize(text):
    """list of (token, position); identifiers are returned whole

    Raises:
        ExpressionSyntaxException: unexpected character
    """

    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        match = IDENTIFIER.match(text, i)
        if match:
            tokens.append((match.group(0), i))
            i = match.end()
        elif ch in SYMBOLS:
            tokens.append((ch, i))
            i += 1
        else:
            raise ExpressionSyntaxException("unexpected character "
                                            + repr(ch), i)
    return tokens

class ExpressionParser(object):
    """Parses one expression against an atom table

    Attributes:
        text (str): expression text
        atom_table (dict): identifier -> Dfa
    """

    def __init__(self, text, atom_table):
        self.text = text
        self.atom_table = atom_table
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][0]
        return None

    def position(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][1]
        return len(self.text)

    def advance(self):
        token = self.tokens[self.pos][0]
        self.pos += 1
        return token

    def expect(self, token):
        if self.peek() != token:
            found = "end of input" if self.peek() is None \
                else repr(self.peek())
            raise ExpressionSyntaxException("expected " + repr(token)
                                            + ", found " + found,
                                            self.position())
        self.advance()

    def parse(self):
        if self.peek() is None:
            raise ExpressionSyntaxException("empty expression",
                                            self.position())
        e = self.parse_union()
        if self.peek() is not None:
            raise ExpressionSyntaxException("unexpected " + repr(self.peek()),
                                            self.position())
        return e

    def _chain(self, operator, operand, node_class):
        children = [operand()]
        while self.peek() == operator:
            self.advance()
            children.append(operand())
        return children[0] if len(children) == 1 else node_class(children)

    def parse_union(self):
        return self._chain("|", self.parse_shuffle, Union)

    def parse_shuffle(self):
        return self._chain("@", self.parse_concat, Shuffle)

    def parse_concat(self):
        return self._chain(".", self.parse_postfix, Concat)

    def parse_postfix(self):
        e = self.parse_primary()
        while self.peek() in ("*", "%"):
            e = Star(e) if self.advance() == "*" else IterShuffle(e)
        return e

    def parse_primary(self):
        token = self.peek()
        position = self.position()
        if token is None:
            raise ExpressionSyntaxException("unexpected end of input",
                                            position)
        if token == "(":
            self.advance()
            e = self.parse_union()
            self.expect(")")
            return e
        if token == "ε":
            self.advance()
            return Epsilon()
        if token == "∅":
            self.advance()
            return Empty()
        if IDENTIFIER.fullmatch(token):
            self.advance()
            if token not in self.atom_table:
                raise UnknownAtomException("unknown atom " + repr(token)
                                           + " at position " + str(position))
            return Atom(token, self.atom_table[token])
        raise ExpressionSyntaxException("unexpected " + repr(token), position)

def parse(text, atom_table):
    """expression tree for text

    Raises:
        ExpressionSyntaxException: text does not match the grammar
        UnknownAtomException: an identifier is missing from atom_table
        AlphabetMismatchException: atoms use different alphabets
    """

    e = ExpressionParser(text, atom_table).parse()
    expression_alphabet(e)
    return e

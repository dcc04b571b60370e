# -*- coding: utf-8 -*-
"""Module perm_closure.exceptions.expression_exception.py

This module contains class definitions for shuffle expression exceptions.
"""

class ExpressionException(Exception):
    """Exception for shuffle expression-related errors"""

    pass

class ExpressionSyntaxException(ExpressionException):
    """Raised when expression text does not match the grammar

    Attributes:
        position (int): 0-based character offset where parsing failed
    """

    def __init__(self, message, position):
        super(ExpressionSyntaxException, self).__init__(
            message + " at position " + str(position))
        self.position = position

class UnknownAtomException(ExpressionException):
    """Raised when an identifier is missing from the atom table"""

    pass

class ResidualException(ExpressionException):
    """Raised when the shuffle identities cannot reach the normal form

    The compiler catches this exception and falls back to the generic NFA
    engine.

    Attributes:
        subterm (ShuffleExpr): the iterated shuffle left irreducible
    """

    def __init__(self, subterm):
        super(ResidualException, self).__init__(
            "star-of-shuffle not reducible by the shuffle identities: "
            + str(subterm))
        self.subterm = subterm

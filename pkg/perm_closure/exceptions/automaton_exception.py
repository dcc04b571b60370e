# -*- coding: utf-8 -*-
"""Module perm_closure.exceptions.automaton_exception.py

This module contains class definitions for exceptions raised while building,
parsing or running finite automata.
"""

class AutomatonException(Exception):
    """Exception for malformed automata and illegal automaton operations"""

    pass

class AutomatonParseException(AutomatonException):
    """Raised when an automaton file cannot be parsed

    Attributes:
        line (int): 1-based line number of the offending line, or None when
            the problem concerns the file as a whole
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = "line " + str(line) + ": " + message
        super(AutomatonParseException, self).__init__(message)
        self.line = line

class AlphabetMismatchException(AutomatonException):
    """Raised when two automata or expressions use different alphabets"""

    pass

class ForeignLetterException(AutomatonException):
    """Raised when a word contains a letter outside the alphabet"""

    pass

class NotPermutationException(AutomatonException):
    """Raised when a construction requires a permutation automaton

    Attributes:
        report (PermutationReport): validation report naming the offending
            letter and states, or None for carriers that are not Dfa objects
    """

    def __init__(self, message, report=None):
        super(NotPermutationException, self).__init__(message)
        self.report = report

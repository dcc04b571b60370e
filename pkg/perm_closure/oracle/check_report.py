# -*- coding: utf-8 -*-
"""Module perm_closure.oracle.check_report.py

This module contains the CheckReport class, the outcome of one verification
check, and cross_check, which compares a compiled automaton with the bounded
semantics of an expression at the level of Parikh vectors.
"""

from perm_closure.config.constants import CHECK_STATUS_DICT
from perm_closure.config.constants import DEFAULT_ORACLE_CANDIDATE_CAP
from perm_closure.config.constants import DEFAULT_ORACLE_SET_CAP
from perm_closure.config.constants import EMPTY_WORD_DISPLAY
from perm_closure.exceptions.automaton_exception import \
    AlphabetMismatchException
from perm_closure.expressions.ast import expression_alphabet
from perm_closure.oracle.bounded import bounded_words
from perm_closure.parikh import parikh_image
from perm_closure.parikh import psi

SIDE_EXPRESSION = "expression"
SIDE_AUTOMATON = "automaton"

def display_word(w):
    return w if w else EMPTY_WORD_DISPLAY

class CheckReport(object):
    """Outcome of a single check

    Attributes:
        name (str): check name
        status (int): 1 passed, -1 failed, 0 skipped, 2 not run
        summary (str): one-line summary for the report
        counterexample (str): first disagreeing word, None on pass
        psi (ParikhVector): Parikh vector of the counterexample
        accepted_by (str): side that accepts the counterexample's vector
        expected_count (int): size of the reference set compared
        actual_count (int): size of the checked set compared
        audit (list): log lines collected while checking
    """

    def __init__(self, name, status=2, summary=""):
        self.name = name
        self.status = status
        self.summary = summary
        self.counterexample = None
        self.psi = None
        self.accepted_by = None
        self.expected_count = None
        self.actual_count = None
        self.audit = []

    @property
    def passed(self):
        return self.status == 1

    def set_status(self, status, summary=None):
        self.status = status
        if summary is not None:
            self.summary = summary

    def set_counterexample(self, word, vector, accepted_by):
        self.counterexample = word
        self.psi = vector
        self.accepted_by = accepted_by

    def append_audit(self, string):
        self.audit.append(string)

    def render(self):
        """'PASS', or 'FAIL' with counterexample, its vector and side"""

        if self.passed:
            return "PASS"
        if self.status == 0:
            return "SKIP: " + self.summary
        if self.counterexample is None:
            return "FAIL: " + self.summary
        return ("FAIL: counterexample " + display_word(self.counterexample)
                + " psi=" + str(self.psi) + " accepted by "
                + self.accepted_by + " only")

    def as_json(self):
        return {
            "name": self.name,
            "status": self.status,
            "result": CHECK_STATUS_DICT[self.status],
            "summary": self.summary,
            "counterexample": self.counterexample,
            "psi": list(self.psi) if self.psi is not None else None,
            "accepted_by": self.accepted_by,
            "expected_count": self.expected_count,
            "actual_count": self.actual_count,
            "audit": self.audit
        }

def cross_check(e, d, n, candidate_cap=DEFAULT_ORACLE_CANDIDATE_CAP,
                set_cap=DEFAULT_ORACLE_SET_CAP):
    """compare Parikh images of L(e) and L(d) on words of length <= n

    For a commutative d this is exactly membership agreement with perm(L(e))
    up to length n.

    Returns:
        (CheckReport): on failure the counterexample is the first word in
            length-then-lex order whose vector lies on one side only
    """

    alphabet = d.alphabet
    expr_alphabet = expression_alphabet(e)
    if expr_alphabet is not None and expr_alphabet != alphabet:
        raise AlphabetMismatchException(
            "alphabet mismatch: expression uses {" + str(expr_alphabet)
            + "}, automaton uses {" + str(alphabet) + "}")
    report = CheckReport("cross_check")
    language = bounded_words(e, n, candidate_cap, set_cap)
    expected = parikh_image(language.words, alphabet)
    accepted = [w for w in alphabet.words(n) if d.accepts(w)]
    actual = parikh_image(accepted, alphabet)
    report.expected_count = len(expected)
    report.actual_count = len(actual)
    report.append_audit("expression: " + str(len(language)) + " words, "
                        + str(len(expected)) + " Parikh vectors")
    report.append_audit("automaton: " + str(len(accepted)) + " words, "
                        + str(len(actual)) + " Parikh vectors")

    if expected == actual:
        report.set_status(1, "Parikh images agree up to length " + str(n))
        return report

    difference = expected ^ actual
    for w in alphabet.words(n):
        vector = psi(w, alphabet)
        if vector in difference:
            side = SIDE_AUTOMATON if vector in actual else SIDE_EXPRESSION
            report.set_counterexample(w, vector, side)
            break
    report.set_status(-1, "Parikh images differ up to length " + str(n))
    return report

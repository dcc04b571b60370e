# -*- coding: utf-8 -*-
"""Module perm_closure.automata.permutation.py

This module contains permutation-automaton validation and the unary analysis
of a single letter: letter orders (lcm of cycle lengths) and the index/period
profile of the state sequence a letter traces from a given state.
"""

from perm_closure.exceptions.automaton_exception import \
    NotPermutationException
from perm_closure.functions.general import cycle_lengths, lcm

class PermutationReport(object):
    """Result of validate_permutation

    Attributes:
        is_permutation (bool): every letter acts as a bijection on the states
        offending (tuple): (letter, (state, state), target) for the first
            letter found to map two states to the same target, else None
        orders (dict): letter -> order L_j, present iff is_permutation
    """

    def __init__(self, is_permutation, offending=None, orders=None):
        self.is_permutation = is_permutation
        self.offending = offending
        self.orders = orders

    def describe(self):
        """human-readable one-line summary used by the CLI and exceptions"""

        if self.is_permutation:
            return "permutation: yes"
        letter, (first, second), target = self.offending
        return ("permutation: no (letter " + letter + " maps states "
                + str(first) + " and " + str(second) + " to " + str(target)
                + ")")

    def __eq__(self, other):
        return isinstance(other, PermutationReport) and \
            (self.is_permutation, self.offending, self.orders) == \
            (other.is_permutation, other.offending, other.orders)

    def __repr__(self):
        return ("PermutationReport(is_permutation=" + str(self.is_permutation)
                + ", offending=" + repr(self.offending) + ", orders="
                + repr(self.orders) + ")")

class UnaryProfile(object):
    """Index and period of the sequence q, delta(q, a), delta(q, aa), ...

    Attributes:
        index (int): tail length i
        period (int): cycle length p, delta(q, a^i) = delta(q, a^(i+p))
    """

    def __init__(self, index, period):
        self.index = index
        self.period = period

    def __eq__(self, other):
        return isinstance(other, UnaryProfile) and \
            (self.index, self.period) == (other.index, other.period)

    def __repr__(self):
        return ("UnaryProfile(index=" + str(self.index) + ", period="
                + str(self.period) + ")")

def validate_permutation(d):
    """check whether every letter permutes the state set

    Args:
        d (Dfa): automaton to check

    Returns:
        (PermutationReport): orders are the lcm of the cycle lengths of each
            letter's permutation
    """

    for j, letter in enumerate(d.alphabet):
        first_source = {}
        for state in d.states:
            target = d.table[state][j]
            if target in first_source:
                return PermutationReport(
                    False, (letter, (first_source[target], state), target))
            first_source[target] = state

    orders = {letter: lcm(*cycle_lengths(d.column(j)))
              for j, letter in enumerate(d.alphabet)}
    return PermutationReport(True, orders=orders)

def require_permutation(d, what="automaton"):
    """validate d and raise NotPermutationException if it fails

    Returns:
        (PermutationReport): the successful report
    """

    report = validate_permutation(d)
    if not report.is_permutation:
        raise NotPermutationException(what + " is not a permutation "
                                      + "automaton: " + report.describe(),
                                      report)
    return report

def letter_orders(d):
    """tuple of letter orders L_1 ... L_k of a permutation automaton"""

    report = require_permutation(d)
    return tuple(report.orders[letter] for letter in d.alphabet)

def unary_profile(d, letter, from_state=None):
    """index and period of the letter's trajectory from a state

    Only transitions on the given letter are followed, so the automaton is
    treated as a unary automaton over that letter.

    Args:
        d (Dfa): automaton
        letter (str): the letter to follow
        from_state (int): first state of the trajectory (default: start)

    Returns:
        (UnaryProfile): minimal (i, p) with delta(q, a^i) = delta(q, a^(i+p))
    """

    j = d.alphabet.index(letter)
    state = d.start if from_state is None else from_state
    first_visit = {}
    step = 0
    while state not in first_visit:
        first_visit[state] = step
        state = d.table[state][j]
        step += 1
    index = first_visit[state]
    return UnaryProfile(index, step - index)

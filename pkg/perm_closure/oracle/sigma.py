# -*- coding: utf-8 -*-
"""Module perm_closure.oracle.sigma.py

Brute-force state labels, computed from words instead of the grid
recurrence, for comparison with compute_grid.
"""

import itertools

from perm_closure.config.constants import DEFAULT_BRUTEFORCE_SUM_CAP
from perm_closure.exceptions.oracle_exception import OracleCapException
from perm_closure.functions.general import states_to_mask
from perm_closure.parikh import ParikhVector
from perm_closure.parikh import words_with_vector

def check_sum(p, sum_cap):
    if sum(p) > sum_cap:
        raise OracleCapException("coordinate sum " + str(sum(p)) + " of "
                                 + str(tuple(p)) + " exceeds cap "
                                 + str(sum_cap))

def bruteforce_sigma(lf, p, sum_cap=DEFAULT_BRUTEFORCE_SUM_CAP):
    """union of f(initial label, w) over all words w with Parikh vector p

    Returns:
        (int): label bitmask
    """

    check_sum(p, sum_cap)
    mask = 0
    for w in words_with_vector(ParikhVector(p), lf.alphabet):
        mask |= lf.step_word(lf.initial, w)
    return mask

def vectors_below(p):
    """all vectors q <= p, by coordinate sum"""

    points = itertools.product(*(range(c + 1) for c in p))
    return sorted(points, key=lambda q: (sum(q), q))

def subtract(p, q):
    return tuple(a - b for a, b in zip(p, q))

class IteratedShuffleSets(object):
    """Parts of the iterated-shuffle label at a point p

    Attributes:
        reached (set): A_p, states delta(s0, w) with psi(w) = p
        restarted (set): B_p, states delta(s0, w) with psi(u w) = p for some
            nonempty u in the iterated shuffle of L(d)
        accepting (bool): p is the Parikh vector of a word of L(d)^+
        label (int): A_p | B_p, plus s0 when accepting, as bitmask
    """

    def __init__(self, reached, restarted, accepting, start):
        self.reached = reached
        self.restarted = restarted
        self.accepting = accepting
        states = set(reached) | set(restarted)
        if accepting:
            states.add(start)
        self.label = states_to_mask(states)

def iterated_shuffle_sets(d, p, sum_cap=DEFAULT_BRUTEFORCE_SUM_CAP):
    """A_p and B_p of the iterated shuffle of L(d), from their definitions

    Membership of a vector q in psi(L(d)^+) is decided by splitting q into
    Parikh vectors of nonempty words of L(d).

    Returns:
        (IteratedShuffleSets)
    """

    p = tuple(p)
    check_sum(p, sum_cap)
    alphabet = d.alphabet

    def in_language(q):
        return any(d.accepts(w)
                   for w in words_with_vector(ParikhVector(q), alphabet))

    below = vectors_below(p)
    plus = set()
    for q in below:
        if sum(q) == 0:
            continue
        if in_language(q) or any(
                u in plus and subtract(q, u) in plus
                for u in below if sum(u) < sum(q)
                and all(a <= b for a, b in zip(u, q))):
            plus.add(q)

    reached = {d.run(w) for w in words_with_vector(ParikhVector(p), alphabet)}
    restarted = set()
    for q in plus:
        if q == p:
            continue
        for w in words_with_vector(ParikhVector(subtract(p, q)), alphabet):
            restarted.add(d.run(w))
    return IteratedShuffleSets(reached, restarted, p in plus and sum(p) > 0,
                               d.start)

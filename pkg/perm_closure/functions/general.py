# -*- coding: utf-8 -*-
"""Module perm_closure.functions.general.py

General functions to be used throughout library/application
"""

import functools
import math

def lcm(*values):
    """least common multiple of positive integers (1 for no arguments)"""

    return functools.reduce(lambda x, y: x * y // math.gcd(x, y), values, 1)

def product(values):
    """product of integers (1 for an empty sequence)"""

    return functools.reduce(lambda x, y: x * y, values, 1)

def cycle_lengths(successors):
    """lengths of the cycles of a permutation given as a successor list

    Arguments:
        successors (sequence): successors[i] is the image of i; must be a
            bijection on range(len(successors))

    Returns:
        (list): one length per cycle, in order of the cycle's smallest element
    """

    seen = [False] * len(successors)
    lengths = []
    for first in range(len(successors)):
        if seen[first]:
            continue
        length = 0
        current = first
        while not seen[current]:
            seen[current] = True
            current = successors[current]
            length += 1
        lengths.append(length)
    return lengths

def is_bijection(successors):
    return sorted(successors) == list(range(len(successors)))

def mask_to_states(mask):
    """sorted list of the states whose bits are set in a bitmask"""

    states = []
    state = 0
    while mask:
        if mask & 1:
            states.append(state)
        mask >>= 1
        state += 1
    return states

def states_to_mask(states):
    mask = 0
    for state in states:
        mask |= 1 << state
    return mask

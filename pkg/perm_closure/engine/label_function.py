# -*- coding: utf-8 -*-
"""Module perm_closure.engine.label_function.py

This module contains the LabelFunction class and its constructors. A label
function is a step function f : P(Q) x Sigma -> P(Q) on subsets of a carrier
state set Q, together with the label of the origin and an acceptance test.
The step must dominate the carrier's letter transitions (compatibility):
delta(S, a) is always a subset of f(S, a).

Subsets of Q are bitmasks: bit s is set iff state s is in the subset.
"""

from perm_closure.automata.constructions import require_same_alphabet
from perm_closure.exceptions.automaton_exception import \
    NotPermutationException
from perm_closure.functions.general import cycle_lengths
from perm_closure.functions.general import is_bijection
from perm_closure.functions.general import lcm
from perm_closure.functions.general import mask_to_states
from perm_closure.functions.general import states_to_mask

KIND_PERM = "perm"
KIND_ITER = "iterstar"
KIND_SHUFFLE = "shuffle"
KIND_EXPR_NFA = "expr-nfa"

def image(mask, successors):
    """delta(S, a) for a subset S given as bitmask"""

    result = 0
    while mask:
        low = mask & -mask
        result |= 1 << successors[low.bit_length() - 1]
        mask ^= low
    return result

class LabelFunction(object):
    """Step function over subsets of a carrier state set

    Attributes:
        kind (str): which construction built the function (perm, iterstar,
            shuffle, expr-nfa)
        alphabet (Alphabet): alphabet shared by all components
        carrier_size (int): |Q|
        compat (tuple): compat[j][s] is delta(s, a_j) on the carrier
        initial (int): label of the origin, as bitmask
        finals (int): a label is accepting iff it meets this bitmask
        accepts_empty (bool): the underlying language contains the empty word
            even if the origin label is not accepting
        components (tuple): (offset, size) per component automaton
    """

    def __init__(self, kind, alphabet, compat, initial, finals, step_func,
                 accepts_empty=False, components=None):
        self.kind = kind
        self.alphabet = alphabet
        self.carrier_size = len(compat[0])
        self.compat = tuple(tuple(c) for c in compat)
        self.initial = initial
        self.finals = finals
        self.accepts_empty = accepts_empty
        self.components = tuple(components) if components else \
            ((0, self.carrier_size),)
        self._step_func = step_func
        self._memo = {}

    def step(self, mask, j):
        """f(S, a_j), memoized per (mask, letter)"""

        key = (mask, j)
        if key not in self._memo:
            self._memo[key] = self._step_func(mask, j)
        return self._memo[key]

    def image(self, mask, j):
        """the compatible transition delta(S, a_j)"""

        return image(mask, self.compat[j])

    def step_word(self, mask, word):
        """f extended to words: f(S, ux) = f(f(S, u), x)"""

        for letter in word:
            mask = self.step(mask, self.alphabet.index(letter))
        return mask

    def accepts(self, mask):
        return mask & self.finals != 0

    def is_permutation_carrier(self):
        return all(is_bijection(c) for c in self.compat)

    def letter_orders(self):
        """order of each letter on the whole carrier

        Raises:
            NotPermutationException: some letter is not a bijection
        """

        if not self.is_permutation_carrier():
            raise NotPermutationException(
                "label function carrier is not a permutation semi-automaton")
        return tuple(lcm(*cycle_lengths(c)) for c in self.compat)

    def states(self, mask):
        return mask_to_states(mask)

    def __repr__(self):
        return ("LabelFunction(kind=" + self.kind + ", carrier_size="
                + str(self.carrier_size) + ", initial="
                + str(mask_to_states(self.initial)) + ")")

def label_fn_perm(d):
    """f(S, a) = delta(S, a), origin {q0}, accepting iff S meets F

    Any complete Dfa is accepted; the build operations check the permutation
    property themselves.
    """

    compat = [d.column(j) for j in range(len(d.alphabet))]
    return LabelFunction(KIND_PERM, d.alphabet, compat, 1 << d.start,
                         states_to_mask(d.finals),
                         lambda mask, j: image(mask, compat[j]))

def label_fn_iter(d):
    """delta(S, a), plus the start state whenever the image meets F"""

    compat = [d.column(j) for j in range(len(d.alphabet))]
    finals = states_to_mask(d.finals)
    start = 1 << d.start

    def step(mask, j):
        result = image(mask, compat[j])
        if result & finals:
            result |= start
        return result

    return LabelFunction(KIND_ITER, d.alphabet, compat, start, finals, step)

def label_fn_shuffle(ds):
    """label function for the shuffle of n automata on disjoint state sets

    Component i occupies states offset_i ... offset_i + |Q_i| - 1 of the
    carrier. After every step, and at the origin, the start state of
    component i + 1 joins the label when the component-i part meets F_i;
    components are processed left to right so the additions cascade.

    Raises:
        AlphabetMismatchException: the automata use different alphabets
    """

    require_same_alphabet(ds)
    alphabet = ds[0].alphabet
    components = []
    offset = 0
    for d in ds:
        components.append((offset, d.state_count))
        offset += d.state_count

    compat = [[] for _ in range(len(alphabet))]
    for d, (offset, _) in zip(ds, components):
        for j in range(len(alphabet)):
            compat[j].extend(offset + t for t in d.column(j))

    part_finals = [states_to_mask(offset + f for f in d.finals)
                   for d, (offset, _) in zip(ds, components)]
    starts = [1 << (offset + d.start) for d, (offset, _)
              in zip(ds, components)]

    def cascade(mask):
        for i in range(len(ds) - 1):
            if mask & part_finals[i]:
                mask |= starts[i + 1]
        return mask

    def step(mask, j):
        return cascade(image(mask, compat[j]))

    return LabelFunction(KIND_SHUFFLE, alphabet, compat, cascade(starts[0]),
                         part_finals[-1], step, components=components)

def label_fn_expr_nfa(nfa):
    """f(S, a) = closure(delta(closure(S), a)) on an epsilon-NFA carrier

    Raises:
        NotPermutationException: some letter does not act as a bijection on
            the NFA states once epsilon edges are ignored
    """

    if not nfa.letter_core_is_permutation():
        raise NotPermutationException(
            "expression NFA letter core is not a permutation semi-automaton")

    compat = [nfa.letter_function(letter) for letter in nfa.alphabet]
    closure_of = [states_to_mask(nfa.epsilon_closure([s]))
                  for s in range(nfa.state_count)]

    def closure(mask):
        result = 0
        while mask:
            low = mask & -mask
            result |= closure_of[low.bit_length() - 1]
            mask ^= low
        return result

    def step(mask, j):
        return closure(image(closure(mask), compat[j]))

    return LabelFunction(KIND_EXPR_NFA, nfa.alphabet, compat,
                         closure(states_to_mask(nfa.starts)),
                         states_to_mask(nfa.finals), step,
                         accepts_empty=nfa.accepts_empty)

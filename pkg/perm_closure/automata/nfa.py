# -*- coding: utf-8 -*-
"""Module perm_closure.automata.nfa.py

This module contains the Nfa class, an epsilon-NFA used as carrier for
expression compilation and the shuffle product. Besides start and final
states it records whether the empty word is accepted, since a nullable
fragment (for instance an iterated shuffle) has no state that is both initial
and final without breaking the permutation core of the letter edges.
"""

from perm_closure.exceptions.automaton_exception import AutomatonException

class Nfa(object):
    """Nondeterministic automaton with epsilon edges

    Attributes:
        alphabet (Alphabet): ordered input alphabet
        state_count (int): number of states
        letter_edges (frozenset): (state, letter, state) triples
        epsilon_edges (frozenset): (state, state) pairs
        starts (frozenset): initial states
        finals (frozenset): accepting states
        accepts_empty (bool): the empty word is accepted even if no initial
            state's closure is final
    """

    def __init__(self, alphabet, state_count, letter_edges, epsilon_edges,
                 starts, finals, accepts_empty=False):
        letter_edges = frozenset(letter_edges)
        epsilon_edges = frozenset(epsilon_edges)
        starts = frozenset(starts)
        finals = frozenset(finals)

        def check(state):
            if not 0 <= state < state_count:
                raise AutomatonException("NFA refers to unknown state "
                                         + str(state))

        for source, letter, target in letter_edges:
            check(source)
            check(target)
            alphabet.index(letter)
        for source, target in epsilon_edges:
            check(source)
            check(target)
        for state in starts | finals:
            check(state)

        self.alphabet = alphabet
        self.state_count = state_count
        self.letter_edges = letter_edges
        self.epsilon_edges = epsilon_edges
        self.starts = starts
        self.finals = finals
        self.accepts_empty = accepts_empty

        self._successors = {}
        for source, letter, target in letter_edges:
            self._successors.setdefault((source, letter), set()).add(target)
        self._epsilon = {}
        for source, target in epsilon_edges:
            self._epsilon.setdefault(source, set()).add(target)

    def successors(self, state, letter):
        return self._successors.get((state, letter), set())

    def epsilon_closure(self, states):
        """all states reachable from states through epsilon edges only"""

        closure = set(states)
        stack = list(states)
        while stack:
            state = stack.pop()
            for target in self._epsilon.get(state, ()):
                if target not in closure:
                    closure.add(target)
                    stack.append(target)
        return frozenset(closure)

    def step(self, states, letter):
        """closure of the letter image of the closure of states"""

        image = set()
        for state in self.epsilon_closure(states):
            image |= self.successors(state, letter)
        return self.epsilon_closure(image)

    def initial(self):
        return self.epsilon_closure(self.starts)

    def accepts(self, word):
        """standard run of the epsilon-NFA

        Raises:
            ForeignLetterException: word contains a letter outside the alphabet
        """

        self.alphabet.check_word(word)
        if word == "" and self.accepts_empty:
            return True
        current = self.initial()
        for letter in word:
            current = self.step(current, letter)
        return len(current & self.finals) > 0

    def letter_function(self, letter):
        """successor list of letter when the letter edges form a function

        Returns:
            (list): successor of every state, or None if some state has zero
                or several successors on the letter
        """

        result = []
        for state in range(self.state_count):
            targets = self.successors(state, letter)
            if len(targets) != 1:
                return None
            result.append(next(iter(targets)))
        return result

    def letter_core_is_permutation(self):
        """every letter is a bijection on the states when epsilons are ignored"""

        for letter in self.alphabet:
            succ = self.letter_function(letter)
            if succ is None or len(set(succ)) != self.state_count:
                return False
        return True

    def __repr__(self):
        return ("Nfa(alphabet=" + repr(self.alphabet) + ", states="
                + str(self.state_count) + ", starts=" + str(sorted(self.starts))
                + ", finals=" + str(sorted(self.finals)) + ", accepts_empty="
                + str(self.accepts_empty) + ")")

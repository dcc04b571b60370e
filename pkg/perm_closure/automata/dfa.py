# -*- coding: utf-8 -*-
"""Module perm_closure.automata.dfa.py

This module contains the Dfa class, the complete deterministic automaton that
every construction in the library consumes and produces. Dfa objects are
immutable: transition tables are stored as tuples and all derived automata are
new objects.
"""

from perm_closure.exceptions.automaton_exception import AutomatonException

class Dfa(object):
    """Complete deterministic finite automaton over an ordered alphabet

    States are the integers 0 ... state_count - 1.

    Attributes:
        alphabet (Alphabet): ordered input alphabet
        state_count (int): number of states, at least one
        table (tuple): table[state][j] is the successor of state on letter a_j
        start (int): start state
        finals (frozenset): accepting states
    """

    def __init__(self, alphabet, state_count, table, start, finals):
        """instantiate a Dfa object

        Args:
            alphabet (Alphabet): ordered input alphabet
            state_count (int): number of states
            table (sequence): one row per state, one successor per letter
            start (int): start state
            finals (iterable): accepting states

        Raises:
            AutomatonException: the table is incomplete or refers to states
                outside 0 ... state_count - 1
        """

        if state_count < 1:
            raise AutomatonException("automaton needs at least one state")
        table = tuple(tuple(row) for row in table)
        if len(table) != state_count:
            raise AutomatonException(
                "transition table has " + str(len(table)) + " rows, expected "
                + str(state_count))
        for state, row in enumerate(table):
            if len(row) != len(alphabet):
                raise AutomatonException(
                    "state " + str(state) + " has " + str(len(row))
                    + " transitions, expected " + str(len(alphabet)))
            for target in row:
                if not 0 <= target < state_count:
                    raise AutomatonException(
                        "state " + str(state) + " has transition to unknown "
                        + "state " + str(target))
        if not 0 <= start < state_count:
            raise AutomatonException("start state " + str(start)
                                     + " out of range")
        finals = frozenset(finals)
        for state in finals:
            if not 0 <= state < state_count:
                raise AutomatonException("final state " + str(state)
                                         + " out of range")

        self.alphabet = alphabet
        self.state_count = state_count
        self.table = table
        self.start = start
        self.finals = finals

    @property
    def states(self):
        return range(self.state_count)

    def delta(self, state, letter):
        """successor of state on a letter given as a symbol"""

        return self.table[state][self.alphabet.index(letter)]

    def column(self, j):
        """tuple of successors of every state on letter a_j"""

        return tuple(row[j] for row in self.table)

    def run(self, word, state=None):
        """state reached from state (default: start) after reading word

        Raises:
            ForeignLetterException: word contains a letter outside the alphabet
        """

        if state is None:
            state = self.start
        for letter in word:
            state = self.table[state][self.alphabet.index(letter)]
        return state

    def accepts(self, word):
        return self.run(word) in self.finals

    def reachable(self):
        """states reachable from start, in BFS order over alphabet order"""

        order = [self.start]
        seen = {self.start}
        i = 0
        while i < len(order):
            for target in self.table[order[i]]:
                if target not in seen:
                    seen.add(target)
                    order.append(target)
            i += 1
        return order

    def with_finals(self, finals):
        """copy of this automaton with a different set of final states"""

        return Dfa(self.alphabet, self.state_count, self.table, self.start,
                   finals)

    def renumber(self, order):
        """copy with states renumbered so that order[i] becomes state i

        Args:
            order (list): permutation of all states
        """

        new_id = {old: new for new, old in enumerate(order)}
        table = [tuple(new_id[t] for t in self.table[old]) for old in order]
        return Dfa(self.alphabet, self.state_count, table, new_id[self.start],
                   {new_id[f] for f in self.finals})

    def _key(self):
        return (self.alphabet, self.state_count, self.table, self.start,
                tuple(sorted(self.finals)))

    def __eq__(self, other):
        return isinstance(other, Dfa) and self._key() == other._key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return ("Dfa(alphabet=" + repr(self.alphabet) + ", states="
                + str(self.state_count) + ", start=" + str(self.start)
                + ", finals=" + str(sorted(self.finals)) + ")")

# -*- coding: utf-8 -*-
"""Module perm_closure.automata.constructions.py

This module contains the standard automaton constructions: membership and
bounded enumeration, reachable products (union of group languages), subset
construction, the NFA shuffle product, Hopcroft minimization with canonical
BFS numbering, and language equivalence.
"""

import logging
from collections import deque

from perm_closure.automata.dfa import Dfa
from perm_closure.automata.nfa import Nfa
from perm_closure.automata.permutation import require_permutation
from perm_closure.exceptions.automaton_exception import \
    AlphabetMismatchException

def require_same_alphabet(automata):
    """raise AlphabetMismatchException unless all automata share an alphabet"""

    alphabets = {a.alphabet for a in automata}
    if len(alphabets) > 1:
        raise AlphabetMismatchException(
            "alphabet mismatch: " + ", ".join(
                sorted("{" + str(a) + "}" for a in alphabets)))

def member(d, word):
    """True iff d accepts word

    Raises:
        ForeignLetterException: word contains a letter outside the alphabet
    """

    return d.accepts(word)

def enumerate_words(d, max_len):
    """accepted words of length <= max_len in length-then-lex order"""

    return [w for w in d.alphabet.words(max_len) if d.accepts(w)]

def empty_dfa(alphabet):
    """one-state automaton accepting nothing"""

    return Dfa(alphabet, 1, [[0] * len(alphabet)], 0, [])

def universal_dfa(alphabet):
    """one-state automaton accepting every word"""

    return Dfa(alphabet, 1, [[0] * len(alphabet)], 0, [0])

def epsilon_dfa(alphabet):
    """two-state automaton accepting only the empty word"""

    return Dfa(alphabet, 2, [[1] * len(alphabet), [1] * len(alphabet)], 0,
               [0])

def add_empty_word(d):
    """prepend a fresh final start state copying the start's transitions

    The new state gets the highest id; the old start stays in the automaton
    even if it becomes unreachable.

    Returns:
        (Dfa): automaton for L(d) + {empty word} with one extra state
    """

    fresh = d.state_count
    table = list(d.table) + [d.table[d.start]]
    return Dfa(d.alphabet, d.state_count + 1, table, fresh,
               set(d.finals) | {fresh})

def disjoint_sum(first, second):
    """second's states appended after first's, start and finals of first

    Only useful for building automata with unreachable parts.
    """

    require_same_alphabet([first, second])
    offset = first.state_count
    table = list(first.table) + [
        tuple(t + offset for t in row) for row in second.table]
    return Dfa(first.alphabet, first.state_count + second.state_count, table,
               first.start, first.finals)

def product(ds, accept):
    """reachable product automaton

    Args:
        ds (list): automata over one alphabet
        accept (callable): maps a tuple of per-component acceptance flags to
            the acceptance of the product state

    Returns:
        (Dfa): states numbered in BFS order from the start tuple
    """

    require_same_alphabet(ds)
    alphabet = ds[0].alphabet
    start = tuple(d.start for d in ds)
    ids = {start: 0}
    order = [start]
    table = []
    i = 0
    while i < len(order):
        current = order[i]
        row = []
        for j in range(len(alphabet)):
            target = tuple(d.table[q][j] for d, q in zip(ds, current))
            if target not in ids:
                ids[target] = len(order)
                order.append(target)
            row.append(ids[target])
        table.append(row)
        i += 1
    finals = [ids[t] for t in order
              if accept(tuple(q in d.finals for d, q in zip(ds, t)))]
    return Dfa(alphabet, len(order), table, 0, finals)

def union_product(ds):
    """union of group languages as a permutation automaton

    Raises:
        NotPermutationException: an input is not a permutation automaton
        AlphabetMismatchException: inputs use different alphabets
    """

    require_same_alphabet(ds)
    for d in ds:
        require_permutation(d, "union_product input")
    return product(ds, any)

def intersection_product(ds):
    return product(ds, all)

def complement(d):
    return d.with_finals(set(d.states) - set(d.finals))

def dfa_to_nfa(d, offset=0, state_count=None):
    """letter edges of d shifted by offset, as an Nfa over state_count states"""

    if state_count is None:
        state_count = offset + d.state_count
    edges = {(offset + s, letter, offset + d.table[s][j])
             for s in d.states for j, letter in enumerate(d.alphabet)}
    return Nfa(d.alphabet, state_count, edges, [],
               [offset + d.start], [offset + f for f in d.finals])

def shuffle_product(ds):
    """NFA for the shuffle of the languages of ds

    States are tuples with one component per factor; reading a letter
    advances exactly one component. Only tuples reachable from the start
    tuple are created.
    """

    require_same_alphabet(ds)
    alphabet = ds[0].alphabet
    start = tuple(d.start for d in ds)
    ids = {start: 0}
    order = [start]
    edges = set()
    i = 0
    while i < len(order):
        current = order[i]
        for j, letter in enumerate(alphabet):
            for position, d in enumerate(ds):
                target = current[:position] \
                    + (d.table[current[position]][j],) \
                    + current[position + 1:]
                if target not in ids:
                    ids[target] = len(order)
                    order.append(target)
                edges.add((ids[current], letter, ids[target]))
        i += 1
    finals = [ids[t] for t in order
              if all(q in d.finals for d, q in zip(ds, t))]
    return Nfa(alphabet, len(order), edges, [], [0], finals)

def determinize(nfa):
    """subset construction over epsilon closures

    Subsets are explored in BFS order from the initial closure with letters
    in alphabet order, so the numbering is canonical. The empty subset is
    kept as a sink so the result is complete. If the NFA accepts the empty
    word without a final state in its initial closure, a fresh final start
    state is added.
    """

    alphabet = nfa.alphabet
    start = nfa.initial()
    ids = {start: 0}
    order = [start]
    table = []
    i = 0
    while i < len(order):
        current = order[i]
        row = []
        for letter in alphabet:
            target = nfa.step(current, letter)
            if target not in ids:
                ids[target] = len(order)
                order.append(target)
            row.append(ids[target])
        table.append(row)
        i += 1
    finals = [ids[s] for s in order if s & nfa.finals]
    d = Dfa(alphabet, len(order), table, 0, finals)
    if nfa.accepts_empty and d.start not in d.finals:
        d = add_empty_word(d)
    return d

def _hopcroft_blocks(d, states):
    """coarsest partition of states compatible with finality and delta"""

    k = len(d.alphabet)
    inverse = [{} for _ in range(k)]
    for s in states:
        for j in range(k):
            inverse[j].setdefault(d.table[s][j], []).append(s)

    finals = [s for s in states if s in d.finals]
    others = [s for s in states if s not in d.finals]
    blocks = [set(b) for b in (finals, others) if b]
    block_of = {}
    for index, block in enumerate(blocks):
        for s in block:
            block_of[s] = index

    smaller = 0 if len(blocks) == 1 or len(blocks[0]) <= len(blocks[1]) \
        else 1
    waiting = deque((smaller, j) for j in range(k))
    waiting_set = set(waiting)

    while waiting:
        splitter = waiting.popleft()
        waiting_set.discard(splitter)
        index, j = splitter
        sources = []
        for target in blocks[index]:
            sources.extend(inverse[j].get(target, ()))

        touched = {}
        for s in sources:
            touched.setdefault(block_of[s], set()).add(s)

        for y, inside in touched.items():
            if len(inside) == len(blocks[y]):
                continue
            outside = blocks[y] - inside
            new = len(blocks)
            # the smaller half becomes the new block
            if len(inside) <= len(outside):
                blocks[y] = outside
                blocks.append(inside)
            else:
                blocks[y] = inside
                blocks.append(outside)
            for s in blocks[new]:
                block_of[s] = new
            for letter in range(k):
                if (y, letter) in waiting_set:
                    waiting.append((new, letter))
                    waiting_set.add((new, letter))
                else:
                    pick = y if len(blocks[y]) <= len(blocks[new]) else new
                    waiting.append((pick, letter))
                    waiting_set.add((pick, letter))
    return block_of

def minimize(d):
    """minimal complete automaton for L(d)

    Unreachable states are removed, equivalent states merged by Hopcroft's
    partition refinement, and the quotient renumbered in BFS order from the
    start state over the alphabet order.
    """

    reachable = d.reachable()
    block_of = _hopcroft_blocks(d, reachable)

    representative = {}
    for s in reachable:
        representative.setdefault(block_of[s], s)

    start_block = block_of[d.start]
    ids = {start_block: 0}
    order = [start_block]
    table = []
    i = 0
    while i < len(order):
        source = representative[order[i]]
        row = []
        for target in d.table[source]:
            block = block_of[target]
            if block not in ids:
                ids[block] = len(order)
                order.append(block)
            row.append(ids[block])
        table.append(row)
        i += 1
    finals = [ids[b] for b in order if representative[b] in d.finals]
    result = Dfa(d.alphabet, len(order), table, 0, finals)
    logging.debug("minimized %d states to %d" % (d.state_count,
                                                 result.state_count))
    return result

def canonicalize(d):
    """renumber states: reachable ones in BFS order, then the rest by id

    The state count and the language are unchanged, so the result is the
    byte-stable form written by the serializer.
    """

    reachable = d.reachable()
    seen = set(reachable)
    order = reachable + [s for s in d.states if s not in seen]
    return d.renumber(order)

def equivalent(d1, d2):
    """True iff L(d1) = L(d2), by comparing canonical minimal automata

    Raises:
        AlphabetMismatchException: the automata use different alphabets
    """

    require_same_alphabet([d1, d2])
    return minimize(d1) == minimize(d2)

def is_commutative(d):
    """delta(q, ab) = delta(q, ba) for all states q and letter pairs"""

    k = len(d.alphabet)
    for q in d.states:
        for i in range(k):
            for j in range(i + 1, k):
                if d.table[d.table[q][i]][j] != d.table[d.table[q][j]][i]:
                    return False
    return True

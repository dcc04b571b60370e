# -*- coding: utf-8 -*-
"""Module unittests.methods.py

This module contains common methods to be accessed by multiple unit testing
modules: seeded random permutation automata and fixture expression loading.
"""

import random

from perm_closure.automata.alphabet import Alphabet
from perm_closure.automata.dfa import Dfa
from perm_closure.expression_file_parser import load_expression
from perm_closure.expressions.ast import Atom
from perm_closure.expressions.ast import Empty
from perm_closure.expressions.ast import Epsilon
from perm_closure.expressions.ast import IterShuffle
from perm_closure.expressions.ast import Shuffle
from perm_closure.expressions.ast import Star
from perm_closure.expressions.ast import Union
from perm_closure.fixtures import expression_path
from perm_closure.fixtures import load_fixture
from perm_closure.functions.general import cycle_lengths
from perm_closure.functions.general import lcm

def random_permutation(rng, n, max_order):
    """successor list of a random permutation of order <= max_order"""

    while True:
        successors = list(range(n))
        rng.shuffle(successors)
        if lcm(*cycle_lengths(successors)) <= max_order:
            return successors

def random_permutation_dfa(rng, max_states=5, letters="ab", max_order=4):
    """random permutation automaton with 1 ... max_states states

    Args:
        rng (random.Random): source of randomness
        max_states (int): largest state count
        letters (str): alphabet letters
        max_order (int): largest order of any letter

    Returns:
        (Dfa)
    """

    n = rng.randint(1, max_states)
    columns = [random_permutation(rng, n, max_order) for _ in letters]
    table = [[column[s] for column in columns] for s in range(n)]
    finals = [s for s in range(n) if rng.random() < 0.5]
    return Dfa(Alphabet(letters), n, table, rng.randrange(n), finals)

def random_corpus(seed, count, **kwargs):
    rng = random.Random(seed)
    return [random_permutation_dfa(rng, **kwargs) for _ in range(count)]

def corpus_pairs(corpus):
    """consecutive pairs of corpus automata"""

    return [corpus[i:i + 2] for i in range(len(corpus) - 1)]

def corpus_tuples(corpus, count):
    """count pairs and triples of consecutive corpus automata, alternating"""

    return [corpus[i:i + 2 + i % 2] for i in range(count)]

def random_dfa(rng, max_states=5, letters="a"):
    """random complete automaton, not necessarily a permutation automaton"""

    n = rng.randint(1, max_states)
    table = [[rng.randrange(n) for _ in letters] for _ in range(n)]
    finals = [s for s in range(n) if rng.random() < 0.5]
    return Dfa(Alphabet(letters), n, table, rng.randrange(n), finals)

def random_expression(rng, depth, leaves, operators):
    """random expression tree with at most depth nested operators

    Args:
        rng (random.Random): source of randomness
        depth (int): maximum operator nesting
        leaves (list): atoms and constants to pick leaves from
        operators (list): expression node classes to pick operators from

    Returns:
        (ShuffleExpr)
    """

    if depth == 0 or rng.random() < 0.3:
        return rng.choice(leaves)
    operator = rng.choice(operators)
    if operator in (Star, IterShuffle):
        return operator(random_expression(rng, depth - 1, leaves, operators))
    return operator(*[random_expression(rng, depth - 1, leaves, operators)
                      for _ in range(rng.choice([2, 3]))])

def random_shuffle_expressions(seed, count, depth=3, operators=None):
    """count random expressions over E, O, Z and the constants"""

    rng = random.Random(seed)
    leaves = list(fixture_atoms().values()) + [Epsilon(), Empty()]
    if operators is None:
        operators = [Union, Shuffle, IterShuffle]
    return [random_expression(rng, depth, leaves, operators)
            for _ in range(count)]

def fixture_atoms():
    """atoms E, O and Z over the alphabet {a, b}"""

    return {
        "E": Atom("E", load_fixture("even_a")),
        "O": Atom("O", load_fixture("odd_a")),
        "Z": Atom("Z", load_fixture("z3"))
    }

def fixture_atom_table():
    return {name: atom.dfa for name, atom in fixture_atoms().items()}

def load_fixture_expression(name):
    return load_expression(expression_path(name))

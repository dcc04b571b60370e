# -*- coding: utf-8 -*-
"""Module perm_closure.engine.builders.py

This module turns state label grids into automata and contains the builders
for the commutative closure of a group language, of its iterated shuffle, of
an n-fold shuffle of group languages, and of an expression NFA whose letter
edges form a permutation semi-automaton.
"""

import logging

from perm_closure.automata.constructions import add_empty_word
from perm_closure.automata.constructions import minimize as minimize_dfa
from perm_closure.automata.constructions import require_same_alphabet
from perm_closure.automata.dfa import Dfa
from perm_closure.automata.permutation import require_permutation
from perm_closure.config.constants import DEFAULT_GRID_CAP
from perm_closure.config.constants import DEFAULT_MINIMIZE
from perm_closure.config.constants import DEFAULT_SHRINK_RAYS
from perm_closure.engine.grid import compute_grid
from perm_closure.engine.grid import grid_bounds
from perm_closure.engine.grid import shrink_bounds
from perm_closure.engine.label_function import label_fn_expr_nfa
from perm_closure.engine.label_function import label_fn_iter
from perm_closure.engine.label_function import label_fn_perm
from perm_closure.engine.label_function import label_fn_shuffle
from perm_closure.exceptions.automaton_exception import \
    AlphabetMismatchException
from perm_closure.exceptions.construction_exception import \
    ShuffleAlphabetException
from perm_closure.functions.general import lcm
from perm_closure.functions.general import product

class Construction(object):
    """Result of a grid build

    Attributes:
        kind (str): label function kind
        dfa (Dfa): resulting automaton, minimized unless disabled
        unminimized_size (int): states of the grid automaton, including the
            fresh empty-word state if one was added
        state_bound (int): upper bound on unminimized_size for this
            construction
        bounds (GridBounds): box the automaton was read from
        epsilon_state (bool): a fresh empty-word start state was added
        grid_dfa (Dfa): the grid automaton before minimization
    """

    def __init__(self, kind, dfa, unminimized_size, state_bound, bounds,
                 epsilon_state=False, grid_dfa=None):
        self.kind = kind
        self.dfa = dfa
        self.unminimized_size = unminimized_size
        self.state_bound = state_bound
        self.bounds = bounds
        self.epsilon_state = epsilon_state
        self.grid_dfa = grid_dfa if grid_dfa is not None else dfa

    def __repr__(self):
        return ("Construction(kind=" + self.kind + ", unminimized="
                + str(self.unminimized_size) + ", bound="
                + str(self.state_bound) + ", minimized="
                + str(self.dfa.state_count) + ")")

def grid_to_dfa(grid):
    """automaton reading Parikh vectors through the grid

    States are the box points in evaluation order, so the origin is state 0.
    Letter a_j increments coordinate j, wrapping from I_j + P_j - 1 back to
    I_j. A point is final iff its label is accepting.
    """

    bounds = grid.bounds
    extents = bounds.extents
    ids = {p: i for i, p in enumerate(grid.order)}
    table = []
    for p in grid.order:
        row = []
        for j, c in enumerate(p):
            c += 1
            if c == extents[j]:
                c = bounds.index[j]
            row.append(ids[p[:j] + (c,) + p[j + 1:]])
        table.append(row)
    finals = [ids[p] for p in grid.order if grid.lf.accepts(grid.labels[p])]
    return Dfa(grid.lf.alphabet, len(grid.order), table, 0, finals)

def build_from_label_function(lf, state_bound, add_epsilon=False,
                              minimize=DEFAULT_MINIMIZE,
                              shrink_rays=DEFAULT_SHRINK_RAYS,
                              grid_cap=DEFAULT_GRID_CAP):
    """grid pipeline shared by all builders

    Args:
        lf (LabelFunction): label function on a permutation carrier
        state_bound (int): bound recorded in the Construction
        add_epsilon (bool): the language contains the empty word; a fresh
            final start state is added when the origin is not accepting
        minimize (bool): minimize the grid automaton
        shrink_rays (bool): rebuild on the box given by exact ray profiles
        grid_cap (int): maximum number of grid points

    Returns:
        (Construction)
    """

    bounds = grid_bounds(lf)
    grid = compute_grid(lf, bounds, grid_cap)
    if shrink_rays:
        bounds = shrink_bounds(grid)
        grid = compute_grid(lf, bounds, grid_cap)
    d = grid_to_dfa(grid)

    epsilon_state = False
    if add_epsilon and d.start not in d.finals:
        d = add_empty_word(d)
        epsilon_state = True

    grid_dfa = d
    if minimize:
        d = minimize_dfa(d)
        logging.info("%s: %d grid states (bound %d), %d after minimization"
                     % (lf.kind, grid_dfa.state_count, state_bound,
                        d.state_count))
    else:
        logging.info("%s: %d grid states (bound %d), not minimized"
                     % (lf.kind, grid_dfa.state_count, state_bound))
    return Construction(lf.kind, d, grid_dfa.state_count, state_bound, bounds,
                        epsilon_state, grid_dfa)

def perm_bound(d):
    """|Q|^k times the product of the letter orders"""

    orders = require_permutation(d).orders
    return d.state_count ** len(d.alphabet) \
        * product(orders[letter] for letter in d.alphabet)

def build_perm_dfa(d, **kwargs):
    """automaton for perm(L(d))

    Raises:
        NotPermutationException: d is not a permutation automaton
    """

    require_permutation(d, "perm input")
    return build_from_label_function(label_fn_perm(d), perm_bound(d),
                                     **kwargs)

def build_iterstar_dfa(d, **kwargs):
    """automaton for perm of the iterated shuffle of L(d)

    The empty word is always accepted; one state is added when the start
    state of d is not final.

    Raises:
        NotPermutationException: d is not a permutation automaton
    """

    require_permutation(d, "iterstar input")
    return build_from_label_function(label_fn_iter(d), perm_bound(d) + 1,
                                     add_epsilon=True, **kwargs)

def shuffle_bound(ds):
    """(sum of |Q_i|)^k times, per letter, the lcm of its orders"""

    reports = [require_permutation(d) for d in ds]
    alphabet = ds[0].alphabet
    total = sum(d.state_count for d in ds)
    return total ** len(alphabet) * product(
        lcm(*(r.orders[letter] for r in reports)) for letter in alphabet)

def build_shuffle_dfa(ds, **kwargs):
    """automaton for perm(L(d_1)) shuffled with ... perm(L(d_n))

    Raises:
        NotPermutationException: some input is not a permutation automaton
        ShuffleAlphabetException: the inputs use different alphabets
    """

    try:
        require_same_alphabet(ds)
    except AlphabetMismatchException as e:
        raise ShuffleAlphabetException(str(e))
    for d in ds:
        require_permutation(d, "shuffle input")
    return build_from_label_function(label_fn_shuffle(ds), shuffle_bound(ds),
                                     **kwargs)

def build_expr_nfa_dfa(nfa, **kwargs):
    """automaton for perm(L(nfa)) through the grid of its label function

    Raises:
        NotPermutationException: the letter core of nfa is not a permutation
            semi-automaton
    """

    lf = label_fn_expr_nfa(nfa)
    bound = nfa.state_count ** len(nfa.alphabet) * product(lf.letter_orders())
    if nfa.accepts_empty:
        bound += 1
    return build_from_label_function(lf, bound,
                                     add_epsilon=nfa.accepts_empty, **kwargs)

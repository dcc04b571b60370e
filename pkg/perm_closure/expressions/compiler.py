# -*- coding: utf-8 -*-
"""Module perm_closure.expressions.compiler.py

This module compiles a shuffle expression to an automaton for the
commutative closure of its language.

The main path rewrites the expression to its normal form, builds one grid
automaton per atom of each term, shuffles the factors of a term with the NFA
shuffle product, and unites the terms by a product automaton. When the
normal form cannot be reached the expression goes through the fallback:
operands of a top-level union or shuffle are compiled separately and
combined, everything below becomes an epsilon-NFA made of one copy of each
atom automaton (shuffle as concatenation, iterated shuffle by restart
epsilon edges), whose grid automaton is read off directly.
"""

import logging

from perm_closure.automata.constructions import determinize
from perm_closure.automata.constructions import empty_dfa
from perm_closure.automata.constructions import epsilon_dfa
from perm_closure.automata.constructions import minimize as minimize_dfa
from perm_closure.automata.constructions import product
from perm_closure.automata.constructions import shuffle_product
from perm_closure.automata.nfa import Nfa
from perm_closure.automata.permutation import require_permutation
from perm_closure.config.constants import DEFAULT_GRID_CAP
from perm_closure.config.constants import DEFAULT_MINIMIZE
from perm_closure.config.constants import DEFAULT_REWRITE_BUDGET
from perm_closure.config.constants import DEFAULT_SHRINK_RAYS
from perm_closure.engine.builders import build_expr_nfa_dfa
from perm_closure.engine.builders import build_iterstar_dfa
from perm_closure.engine.builders import build_perm_dfa
from perm_closure.expressions.ast import Atom
from perm_closure.expressions.ast import Empty
from perm_closure.expressions.ast import Epsilon
from perm_closure.expressions.ast import IterShuffle
from perm_closure.expressions.ast import Shuffle
from perm_closure.expressions.ast import Union
from perm_closure.expressions.ast import expression_alphabet
from perm_closure.expressions.rewrite import normal_form
from perm_closure.expressions.rewrite import perm_rewrite
from perm_closure.exceptions.expression_exception import ExpressionException
from perm_closure.exceptions.expression_exception import ResidualException

PATH_NORMAL_FORM = "normal-form"
PATH_FALLBACK = "fallback"

class CompileResult(object):
    """Outcome of compile_expression

    Attributes:
        dfa (Dfa): automaton for the commutative closure
        path (str): normal-form or fallback
        constructions (list): Construction of every grid build, in order
        normal_form (NormalForm): None on the fallback path
        residual (ShuffleExpr): irreducible subterm that forced the
            fallback, None otherwise
    """

    def __init__(self, dfa, path, constructions, normal_form=None,
                 residual=None):
        self.dfa = dfa
        self.path = path
        self.constructions = constructions
        self.normal_form = normal_form
        self.residual = residual

class Fragment(object):
    """Piece of an epsilon-NFA under construction

    Attributes:
        entries (set): states where words of the fragment start
        exits (set): states where words of the fragment end
        nullable (bool): the fragment accepts the empty word
    """

    def __init__(self, entries, exits, nullable):
        self.entries = set(entries)
        self.exits = set(exits)
        self.nullable = nullable

class NfaAssembler(object):
    """Collects atom copies and epsilon edges into one Nfa

    Attributes:
        alphabet (Alphabet): common alphabet
        state_count (int): states allocated so far
        letter_edges (set): (state, letter, state) triples
        epsilon_edges (set): (state, state) pairs
    """

    def __init__(self, alphabet):
        self.alphabet = alphabet
        self.state_count = 0
        self.letter_edges = set()
        self.epsilon_edges = set()

    def atom_nfa(self, d):
        """fresh copy of an atom automaton"""

        offset = self.state_count
        self.state_count += d.state_count
        for s in d.states:
            for j, letter in enumerate(d.alphabet):
                self.letter_edges.add((offset + s, letter,
                                       offset + d.table[s][j]))
        return Fragment([offset + d.start], [offset + f for f in d.finals],
                        d.start in d.finals)

    def link(self, sources, targets):
        for s in sources:
            for t in targets:
                self.epsilon_edges.add((s, t))

    def concat_nfa(self, first, second):
        self.link(first.exits, second.entries)
        entries = set(first.entries)
        if first.nullable:
            entries |= second.entries
        exits = set(second.exits)
        if second.nullable:
            exits |= first.exits
        return Fragment(entries, exits, first.nullable and second.nullable)

    def star_nfa(self, inner):
        self.link(inner.exits, inner.entries)
        return Fragment(inner.entries, inner.exits, True)

    def union_nfa(self, fragments):
        entries = set()
        exits = set()
        for f in fragments:
            entries |= f.entries
            exits |= f.exits
        return Fragment(entries, exits, any(f.nullable for f in fragments))

    def fragment(self, e):
        if isinstance(e, Atom):
            return self.atom_nfa(e.dfa)
        if isinstance(e, Epsilon):
            return Fragment([], [], True)
        if isinstance(e, Empty):
            return Fragment([], [], False)
        if isinstance(e, Union):
            return self.union_nfa([self.fragment(c) for c in e.children])
        if isinstance(e, Shuffle):
            result = self.fragment(e.children[0])
            for c in e.children[1:]:
                result = self.concat_nfa(result, self.fragment(c))
            return result
        if isinstance(e, IterShuffle):
            return self.star_nfa(self.fragment(e.child))
        raise ExpressionException("unexpected node in rewritten expression: "
                                  + repr(e))

    def nfa(self, root):
        return Nfa(self.alphabet, self.state_count, self.letter_edges,
                   self.epsilon_edges, root.entries, root.exits,
                   accepts_empty=root.nullable)

def expression_nfa(e, alphabet):
    """epsilon-NFA for e with shuffle read as concatenation

    Its language has the same commutative closure as e. Returns None when
    the expression has no atoms, together with the fragment.
    """

    assembler = NfaAssembler(alphabet)
    root = assembler.fragment(e)
    if assembler.state_count == 0:
        return None, root
    return assembler.nfa(root), root

class Compiler(object):
    """Holds build options and the constructions made so far

    Intermediate automata are always minimized; the minimize option only
    decides whether a final automaton read directly off one grid is reported
    as built.

    Attributes:
        alphabet (Alphabet): alphabet of the expression
        minimize (bool): minimize the reported automaton
        options (dict): builder keyword arguments, minimization always on
        constructions (list): Construction objects in build order
    """

    def __init__(self, alphabet, minimize=DEFAULT_MINIMIZE,
                 shrink_rays=DEFAULT_SHRINK_RAYS, grid_cap=DEFAULT_GRID_CAP):
        self.alphabet = alphabet
        self.minimize = minimize
        self.options = {"minimize": True, "shrink_rays": shrink_rays,
                        "grid_cap": grid_cap}
        self.constructions = []

    def record(self, construction):
        self.constructions.append(construction)
        return construction.dfa

    def finish(self, d):
        return minimize_dfa(d)

    def report(self, d):
        """the automaton handed back to the caller"""

        if not self.minimize and len(self.constructions) == 1 \
                and d is self.constructions[0].dfa:
            return self.constructions[0].grid_dfa
        return d

    def combine_shuffle(self, ds):
        if len(ds) == 1:
            return ds[0]
        return self.finish(determinize(shuffle_product(ds)))

    def combine_union(self, ds):
        if not ds:
            return empty_dfa(self.alphabet)
        if len(ds) == 1:
            return ds[0]
        return self.finish(product(ds, any))

    def compile_term(self, term):
        factors = [self.record(build_perm_dfa(a.dfa, **self.options))
                   for a in term.atoms]
        if term.star is not None:
            factors.append(self.record(build_iterstar_dfa(term.star.dfa,
                                                          **self.options)))
        if not factors:
            return epsilon_dfa(self.alphabet)
        return self.combine_shuffle(factors)

    def compile_normal_form(self, nf):
        return self.combine_union([self.compile_term(t) for t in nf.terms])

    def compile_fallback(self, e):
        if isinstance(e, Union):
            return self.combine_union([self.compile_fallback(c)
                                       for c in e.children])
        if isinstance(e, Shuffle):
            return self.combine_shuffle([self.compile_fallback(c)
                                         for c in e.children])
        nfa, root = expression_nfa(e, self.alphabet)
        if nfa is None:
            return epsilon_dfa(self.alphabet) if root.nullable \
                else empty_dfa(self.alphabet)
        return self.record(build_expr_nfa_dfa(nfa, **self.options))

def compile_expression(e, force_fallback=False, minimize=DEFAULT_MINIMIZE,
                       shrink_rays=DEFAULT_SHRINK_RAYS,
                       grid_cap=DEFAULT_GRID_CAP,
                       rewrite_budget=DEFAULT_REWRITE_BUDGET, alphabet=None):
    """automaton for perm(L(e))

    Args:
        e (ShuffleExpr): expression over permutation-automaton atoms
        force_fallback (bool): skip the normal form and use the epsilon-NFA
            engine
        minimize (bool): minimize the final automaton; without it a result
            read off a single grid is the grid automaton itself
        shrink_rays (bool): shrink grid boxes by exact ray profiles
        grid_cap (int): maximum number of points of any grid
        rewrite_budget (int): maximum rule applications while normalizing
        alphabet (Alphabet): required only for expressions without atoms

    Returns:
        (CompileResult)

    Raises:
        NotPermutationException: an atom is not a permutation automaton
        GridCapException: some grid exceeds grid_cap
        ExpressionException: no alphabet can be determined
    """

    expr_alphabet = expression_alphabet(e)
    if expr_alphabet is None:
        if alphabet is None:
            raise ExpressionException("expression has no atoms, an alphabet "
                                      + "is required")
        expr_alphabet = alphabet
    for leaf in e.leaves():
        require_permutation(leaf.dfa, "atom " + str(leaf))

    compiler = Compiler(expr_alphabet, minimize, shrink_rays, grid_cap)
    rewritten = perm_rewrite(e)

    if not force_fallback:
        try:
            nf = normal_form(rewritten, rewrite_budget)
        except ResidualException as residual:
            logging.debug("falling back to the expression NFA engine: %s"
                          % residual)
            dfa = compiler.report(compiler.compile_fallback(rewritten))
            return CompileResult(dfa, PATH_FALLBACK, compiler.constructions,
                                 residual=residual.subterm)
        dfa = compiler.report(compiler.compile_normal_form(nf))
        return CompileResult(dfa, PATH_NORMAL_FORM, compiler.constructions,
                             normal_form=nf)

    logging.debug("fallback forced for %s" % rewritten)
    dfa = compiler.report(compiler.compile_fallback(rewritten))
    return CompileResult(dfa, PATH_FALLBACK, compiler.constructions)
